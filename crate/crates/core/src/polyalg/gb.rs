//! Buchberger completion for submodules of `R^r`, `R = F_p[x_1..x_n]`.
//!
//! Vectors are sparse lists of `(position, monomial, coefficient)` sorted
//! descending in the position-over-term order: the term with the smaller
//! position is larger, and ties fall back to the ring's monomial order.
//! Ideals are the rank-one case.

use std::cmp::Ordering;
use std::collections::HashSet;

use crate::exactla::{add_mod, inv_mod, mul_mod, sub_mod};

use super::monomial::{Monomial, MonomialOrder};

pub(crate) type Term = (usize, Monomial, u32);

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct SVec {
    pub terms: Vec<Term>,
}

#[derive(Debug, Clone, Copy)]
pub(crate) struct Ctx {
    pub p: u32,
    pub order: MonomialOrder,
}

impl Ctx {
    pub fn cmp(&self, a: (usize, &Monomial), b: (usize, &Monomial)) -> Ordering {
        b.0.cmp(&a.0).then_with(|| self.order.cmp(a.1, b.1))
    }

    /// `f + factor * m * g`.
    pub fn add_scaled(&self, f: &SVec, factor: u32, m: &Monomial, g: &SVec) -> SVec {
        let p = self.p;
        let (a, b) = (&f.terms, &g.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let mut shifted: Option<Monomial> = None;
        while i < a.len() || j < b.len() {
            if j < b.len() && shifted.is_none() {
                shifted = Some(b[j].1.mul(m));
            }
            let ord = match (a.get(i), shifted.as_ref()) {
                (Some(x), Some(y)) => self.cmp((x.0, &x.1), (b[j].0, y)),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = mul_mod(b[j].2, factor, p);
                    if c != 0 {
                        out.push((b[j].0, shifted.take().unwrap(), c));
                    } else {
                        shifted = None;
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let c = add_mod(a[i].2, mul_mod(b[j].2, factor, p), p);
                    if c != 0 {
                        out.push((a[i].0, a[i].1.clone(), c));
                    }
                    shifted = None;
                    i += 1;
                    j += 1;
                }
            }
        }
        SVec { terms: out }
    }

    pub fn monic(&self, f: &mut SVec) {
        if let Some(&(_, _, c)) = f.terms.first() {
            if c != 1 {
                let inv = inv_mod(c, self.p);
                for t in &mut f.terms {
                    t.2 = mul_mod(t.2, inv, self.p);
                }
            }
        }
    }

    /// Full reduction of `f` by `basis`: no remaining term is divisible by a
    /// lead term sharing its position.
    pub fn reduce(&self, mut f: SVec, basis: &[SVec]) -> SVec {
        let mut i = 0;
        while i < f.terms.len() {
            let (pos, ref mono, c) = f.terms[i];
            let divisor = basis.iter().find(|g| {
                g.terms
                    .first()
                    .is_some_and(|(gp, gm, _)| *gp == pos && gm.divides(mono))
            });
            match divisor {
                Some(g) => {
                    let (_, gm, gc) = &g.terms[0];
                    let q = mono.div(gm);
                    let factor = sub_mod(0, mul_mod(c, inv_mod(*gc, self.p), self.p), self.p);
                    f = self.add_scaled(&f, factor, &q, g);
                }
                None => i += 1,
            }
        }
        f
    }

    fn s_vector(&self, f: &SVec, g: &SVec) -> SVec {
        let (_, fm, fc) = &f.terms[0];
        let (_, gm, gc) = &g.terms[0];
        let l = fm.lcm(gm);
        let a = SVec { terms: Vec::new() };
        let a = self.add_scaled(&a, inv_mod(*fc, self.p), &l.div(fm), f);
        self.add_scaled(&a, sub_mod(0, inv_mod(*gc, self.p), self.p), &l.div(gm), g)
    }

    /// Reduced Groebner basis, monic, sorted ascending by lead term.
    ///
    /// `product_criterion` may only be set when the ambient rank is one.
    pub fn groebner(&self, gens: Vec<SVec>, product_criterion: bool) -> Vec<SVec> {
        let mut basis: Vec<SVec> = Vec::new();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for g in gens {
            let mut g = self.reduce(g, &basis);
            if g.terms.is_empty() {
                continue;
            }
            self.monic(&mut g);
            self.push(&mut basis, &mut pairs, g);
        }
        let mut done: HashSet<(usize, usize)> = HashSet::new();
        while !pairs.is_empty() {
            // normal strategy: smallest lcm first
            let (idx, _) = pairs
                .iter()
                .enumerate()
                .min_by(|(_, a), (_, b)| {
                    let la = self.pair_lcm(&basis, **a);
                    let lb = self.pair_lcm(&basis, **b);
                    la.degree()
                        .cmp(&lb.degree())
                        .then_with(|| self.order.cmp(&la, &lb))
                        .then_with(|| a.cmp(b))
                })
                .unwrap();
            let (i, j) = pairs.swap_remove(idx);
            done.insert((i, j));
            let (fi, fj) = (&basis[i].terms[0], &basis[j].terms[0]);
            if product_criterion && fi.1.is_coprime(&fj.1) {
                continue;
            }
            let l = fi.1.lcm(&fj.1);
            let pos = fi.0;
            let chain = (0..basis.len()).any(|k| {
                k != i
                    && k != j
                    && basis[k].terms[0].0 == pos
                    && basis[k].terms[0].1.divides(&l)
                    && done.contains(&ordered(i, k))
                    && done.contains(&ordered(j, k))
            });
            if chain {
                continue;
            }
            let s = self.s_vector(&basis[i], &basis[j]);
            let mut h = self.reduce(s, &basis);
            if !h.terms.is_empty() {
                self.monic(&mut h);
                self.push(&mut basis, &mut pairs, h);
            }
        }
        self.interreduce(basis)
    }

    fn pair_lcm(&self, basis: &[SVec], (i, j): (usize, usize)) -> Monomial {
        basis[i].terms[0].1.lcm(&basis[j].terms[0].1)
    }

    fn push(&self, basis: &mut Vec<SVec>, pairs: &mut Vec<(usize, usize)>, g: SVec) {
        let k = basis.len();
        let pos = g.terms[0].0;
        for (i, b) in basis.iter().enumerate() {
            if b.terms[0].0 == pos {
                pairs.push((i, k));
            }
        }
        basis.push(g);
    }

    fn interreduce(&self, basis: Vec<SVec>) -> Vec<SVec> {
        let lead = |g: &SVec| (g.terms[0].0, g.terms[0].1.clone());
        let mut keep: Vec<SVec> = Vec::new();
        for (i, g) in basis.iter().enumerate() {
            let (gp, gm) = lead(g);
            let redundant = basis.iter().enumerate().any(|(j, h)| {
                let (hp, hm) = lead(h);
                j != i && hp == gp && hm.divides(&gm) && (hm != gm || j < i)
            });
            if !redundant {
                keep.push(g.clone());
            }
        }
        let mut out = Vec::with_capacity(keep.len());
        for i in 0..keep.len() {
            let others: Vec<SVec> = keep
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, g)| g.clone())
                .collect();
            let head = SVec {
                terms: vec![keep[i].terms[0].clone()],
            };
            let tail = SVec {
                terms: keep[i].terms[1..].to_vec(),
            };
            let tail = self.reduce(tail, &others);
            let mut g = head;
            g.terms.extend(tail.terms);
            self.monic(&mut g);
            out.push(g);
        }
        out.sort_by(|a, b| self.cmp((a.terms[0].0, &a.terms[0].1), (b.terms[0].0, &b.terms[0].1)));
        out
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}
