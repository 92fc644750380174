use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const MAX_EXPONENT: u32 = 1 << 15;

/// Exponent vector of a monomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Monomial(Vec<u16>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn from_exponents(exps: &[u32]) -> Result<Self> {
        exps.iter()
            .map(|&e| {
                if e > MAX_EXPONENT {
                    Err(Error::ExponentOverflow)
                } else {
                    Ok(e as u16)
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    pub fn exponents(&self) -> &[u16] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| {
                let s = a as u32 + b as u32;
                if s > MAX_EXPONENT {
                    Err(Error::ExponentOverflow)
                } else {
                    Ok(s as u16)
                }
            })
            .collect::<Result<Vec<_>>>()
            .map(Monomial)
    }

    /// Panics past the exponent limit; parsing rejects such inputs up front.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        self.try_mul(other).expect("monomial exponent overflow")
    }

    /// `self / other`; requires `other | self`.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// The single variable this monomial is a pure power of, if any.
    pub fn pure_power_of(&self) -> Option<usize> {
        let mut nz = self.0.iter().enumerate().filter(|(_, &e)| e > 0);
        match (nz.next(), nz.next()) {
            (Some((i, _)), None) => Some(i),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Grevlex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e).unwrap()
    }

    #[test]
    fn grevlex_breaks_ties_on_last_variable() {
        let o = MonomialOrder::Grevlex;
        // x^2 > xy > y^2 > xz in grevlex on (x, y, z)
        assert_eq!(
            o.cmp(&mono(&[2, 0, 0]), &mono(&[1, 1, 0])),
            Ordering::Greater
        );
        assert_eq!(
            o.cmp(&mono(&[0, 2, 0]), &mono(&[1, 0, 1])),
            Ordering::Greater
        );
        assert_eq!(o.cmp(&mono(&[0, 0, 1]), &mono(&[1, 1, 0])), Ordering::Less);
        assert_eq!(
            MonomialOrder::Lex.cmp(&mono(&[1, 0, 0]), &mono(&[0, 5, 5])),
            Ordering::Greater
        );
    }

    #[test]
    fn exponent_limit() {
        assert!(Monomial::from_exponents(&[MAX_EXPONENT]).is_ok());
        assert_eq!(
            Monomial::from_exponents(&[MAX_EXPONENT + 1]),
            Err(Error::ExponentOverflow)
        );
        let big = mono(&[MAX_EXPONENT]);
        assert_eq!(big.try_mul(&mono(&[1])), Err(Error::ExponentOverflow));
    }
}
