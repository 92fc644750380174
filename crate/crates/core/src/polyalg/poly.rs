use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{add_mod, check_prime, mul_mod, neg_mod, reduce_i64};

use super::monomial::{Monomial, MonomialOrder};

/// `F_p[x_1, ..., x_n]` with a fixed monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PolyRing {
    p: u32,
    vars: Vec<String>,
    order: MonomialOrder,
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl PolyRing {
    pub fn new<S: Into<String>>(
        p: u64,
        vars: impl IntoIterator<Item = S>,
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        let p = check_prime(p)?;
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        for (i, v) in vars.iter().enumerate() {
            if !is_identifier(v) {
                return Err(Error::Parse {
                    offset: 0,
                    message: format!("invalid variable name `{v}`"),
                });
            }
            if vars[..i].contains(v) {
                return Err(Error::Parse {
                    offset: 0,
                    message: format!("duplicate variable `{v}`"),
                });
            }
        }
        Ok(Arc::new(PolyRing { p, vars, order }))
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    /// All monomials of total degree at most `deg`, ascending in the ring order.
    pub fn monomials_up_to(&self, deg: u32) -> Vec<Monomial> {
        let n = self.nvars();
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i == cur.len() {
                out.push(Monomial::from_exponents(cur).unwrap());
                return;
            }
            for e in 0..=left {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
            cur[i] = 0;
        }
        rec(0, deg, &mut cur, &mut out);
        out.sort_by(|a, b| self.cmp(a, b));
        out
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> = m
            .exponents()
            .iter()
            .zip(&self.vars)
            .filter(|(&e, _)| e > 0)
            .map(|(&e, v)| {
                if e == 1 {
                    v.clone()
                } else {
                    format!("{v}^{e}")
                }
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// A polynomial; terms are kept sorted descending in the ring order with no
/// zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    ring: Arc<PolyRing>,
    terms: Vec<(Monomial, u32)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

pub(crate) fn same_ring(a: &Arc<PolyRing>, b: &Arc<PolyRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    pub fn zero(ring: &Arc<PolyRing>) -> Self {
        Polynomial {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<PolyRing>, c: i64) -> Self {
        let c = reduce_i64(c, ring.p);
        Self::from_sorted(
            ring,
            if c == 0 {
                vec![]
            } else {
                vec![(Monomial::one(ring.nvars()), c)]
            },
        )
    }

    pub fn one(ring: &Arc<PolyRing>) -> Self {
        Self::constant(ring, 1)
    }

    pub fn var(ring: &Arc<PolyRing>, i: usize) -> Self {
        Self::from_sorted(ring, vec![(Monomial::var(ring.nvars(), i), 1 % ring.p)])
    }

    pub fn term(ring: &Arc<PolyRing>, m: Monomial, c: u32) -> Self {
        let c = c % ring.p;
        assert_eq!(m.nvars(), ring.nvars());
        Self::from_sorted(ring, if c == 0 { vec![] } else { vec![(m, c)] })
    }

    pub(crate) fn from_sorted(ring: &Arc<PolyRing>, terms: Vec<(Monomial, u32)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| ring.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| *c != 0));
        Polynomial {
            ring: ring.clone(),
            terms,
        }
    }

    /// Combine like terms, drop zeros, sort.
    pub fn from_terms(
        ring: &Arc<PolyRing>,
        terms: impl IntoIterator<Item = (Monomial, u32)>,
    ) -> Self {
        let p = ring.p;
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars());
            let slot = acc.entry(m).or_insert(0);
            *slot = add_mod(*slot, c % p, p);
        }
        let mut v: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        v.sort_by(|a, b| ring.cmp(&b.0, &a.0));
        Polynomial {
            ring: ring.clone(),
            terms: v,
        }
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, u32)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(Monomial, u32)> {
        self.terms.first()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms
            .windows(2)
            .all(|w| w[0].0.degree() == w[1].0.degree())
    }

    pub fn coefficient(&self, m: &Monomial) -> u32 {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map_or(0, |(_, c)| *c)
    }

    fn check_ring(&self, other: &Polynomial) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `self + factor * other`.
    fn merge(&self, other: &Polynomial, factor: u32) -> Polynomial {
        let p = self.ring.p;
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => self.ring.cmp(&x.0, &y.0),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = mul_mod(b[j].1, factor, p);
                    if c != 0 {
                        out.push((b[j].0.clone(), c));
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let c = add_mod(a[i].1, mul_mod(b[j].1, factor, p), p);
                    if c != 0 {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: out,
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other).expect("ring mismatch");
        self.merge(other, 1)
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.check_ring(other).expect("ring mismatch");
        self.merge(other, self.ring.p - 1)
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(neg_mod(1, self.ring.p))
    }

    pub fn scale(&self, c: u32) -> Polynomial {
        let p = self.ring.p;
        let c = c % p;
        if c == 0 {
            return Self::zero(&self.ring);
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, a)| (m.clone(), mul_mod(*a, c, p)))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            terms,
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: u32) -> Result<Polynomial> {
        let p = self.ring.p;
        if c.is_multiple_of(p) {
            return Ok(Self::zero(&self.ring));
        }
        // multiplication by a monomial preserves the order
        let terms = self
            .terms
            .iter()
            .map(|(t, a)| Ok((t.try_mul(m)?, mul_mod(*a, c, p))))
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms,
        })
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ring(other)?;
        let p = self.ring.p;
        let mut acc: HashMap<Monomial, u32> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let slot = acc.entry(m1.try_mul(m2)?).or_insert(0);
                *slot = add_mod(*slot, mul_mod(*c1, *c2, p), p);
            }
        }
        let mut v: Vec<_> = acc.into_iter().filter(|(_, c)| *c != 0).collect();
        v.sort_by(|a, b| self.ring.cmp(&b.0, &a.0));
        Ok(Polynomial {
            ring: self.ring.clone(),
            terms: v,
        })
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.try_mul(other).expect("polynomial product")
    }

    pub fn try_pow(&self, mut e: u32) -> Result<Polynomial> {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.try_mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.try_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Monic rescaling; zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.lead() {
            Some((_, c)) => self.scale(crate::exactla::inv_mod(*c, self.ring.p)),
            None => self.clone(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (m.is_one(), *c) {
                (true, c) => write!(f, "{c}")?,
                (false, 1) => write!(f, "{}", self.ring.format_monomial(m))?,
                (false, c) => write!(f, "{c}*{}", self.ring.format_monomial(m))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({self})")
    }
}
