//! The commutative-ring interface shared by the finite and polynomial backends.

use std::fmt::Debug;

/// A commutative unital ring whose elements are plain values.
///
/// Both backends implement this: [`crate::finalg::FiniteAlgebra`] with
/// coefficient vectors and [`crate::polyalg::PolyQuotient`] with polynomials
/// taken modulo a relation ideal.
pub trait CommRing {
    type Elem: Clone + Debug + PartialEq;

    fn modulus(&self) -> u32;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Image of the residue `c` under `F_p -> R`.
    fn scalar(&self, c: u32) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
}

/// A matrix with entries in a ring, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct RingMatrix<E> {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<E>,
}

impl<E: Clone> RingMatrix<E> {
    pub fn filled(rows: usize, cols: usize, value: E) -> Self {
        RingMatrix {
            rows,
            cols,
            entries: vec![value; rows * cols],
        }
    }

    pub fn get(&self, r: usize, c: usize) -> &E {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn column(&self, c: usize) -> Vec<E> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.get(r, c).clone());
            }
        }
        RingMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn from_columns(rows: usize, columns: &[Vec<E>], zero: E) -> Self {
        let mut m = Self::filled(rows, columns.len(), zero);
        for (c, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), rows);
            for (r, v) in col.iter().enumerate() {
                m.set(r, c, v.clone());
            }
        }
        m
    }
}

/// Product of ring matrices.
pub fn ring_matmul<R: CommRing>(
    ring: &R,
    a: &RingMatrix<R::Elem>,
    b: &RingMatrix<R::Elem>,
) -> RingMatrix<R::Elem> {
    assert_eq!(a.cols, b.rows);
    let mut out = RingMatrix::filled(a.rows, b.cols, ring.zero());
    for r in 0..a.rows {
        for c in 0..b.cols {
            let mut acc = ring.zero();
            for k in 0..a.cols {
                acc = ring.add(&acc, &ring.mul(a.get(r, k), b.get(k, c)));
            }
            out.set(r, c, acc);
        }
    }
    out
}
