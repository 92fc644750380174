use std::sync::Arc;

use super::*;
use crate::error::Error;
use crate::ring::RingMatrix;

fn ring(p: u64, vars: &[&str], order: MonomialOrder) -> Arc<PolyRing> {
    PolyRing::new(p, vars.iter().copied(), order).unwrap()
}

fn polys(r: &Arc<PolyRing>, texts: &[&str]) -> Vec<Polynomial> {
    texts.iter().map(|t| parse_poly(r, t).unwrap()).collect()
}

fn vector(r: &Arc<PolyRing>, texts: &[&str]) -> ModuleVector {
    ModuleVector::new(polys(r, texts))
}

#[test]
fn buchberger_examples() {
    let r = ring(2, &["x", "y"], MonomialOrder::Grevlex);
    let gb = buchberger(&r, &polys(&r, &["x^2", "x*y", "y^2"])).unwrap();
    let mut got: Vec<String> = gb.iter().map(ToString::to_string).collect();
    got.sort();
    assert_eq!(got, vec!["x*y", "x^2", "y^2"]);

    let r1 = ring(2, &["x"], MonomialOrder::Grevlex);
    assert_eq!(
        buchberger(&r1, &polys(&r1, &["x"])).unwrap(),
        polys(&r1, &["x"])
    );

    let lex = ring(2, &["x", "y"], MonomialOrder::Lex);
    let gb = buchberger(&lex, &polys(&lex, &["x+y", "y"])).unwrap();
    assert_eq!(gb, polys(&lex, &["y", "x"]));

    assert!(buchberger(&r, &polys(&r, &["0", "0"])).unwrap().is_empty());
}

#[test]
fn buchberger_is_canonical() {
    let r = ring(3, &["x", "y", "z"], MonomialOrder::Grevlex);
    let gens = polys(&r, &["x^2*y - z^2", "x*z^2 + y^3 + 1", "y*z - x"]);
    let gb = buchberger(&r, &gens).unwrap();
    assert_eq!(buchberger(&r, &gb).unwrap(), gb);
    for g in &gens {
        assert!(normal_form(g, &gb).unwrap().is_zero());
    }
    for g in &gb {
        assert_eq!(g.lead().unwrap().1, 1);
    }
}

#[test]
fn normal_form_examples() {
    let r = ring(2, &["x", "y"], MonomialOrder::Grevlex);
    let gb = buchberger(&r, &polys(&r, &["x^2"])).unwrap();
    assert!(normal_form(&parse_poly(&r, "x^3").unwrap(), &gb)
        .unwrap()
        .is_zero());
    assert_eq!(
        normal_form(&parse_poly(&r, "x^3 + x").unwrap(), &gb).unwrap(),
        parse_poly(&r, "x").unwrap()
    );
    let m = buchberger(&r, &polys(&r, &["x", "y"])).unwrap();
    assert_eq!(
        normal_form(&Polynomial::one(&r), &m).unwrap(),
        Polynomial::one(&r)
    );

    let other = ring(2, &["u"], MonomialOrder::Grevlex);
    assert_eq!(
        normal_form(&Polynomial::one(&other), &m),
        Err(Error::RingMismatch)
    );
}

#[test]
fn normal_form_is_linear_and_idempotent() {
    let r = ring(5, &["x", "y"], MonomialOrder::Grevlex);
    let gb = buchberger(&r, &polys(&r, &["x^2 - 2*y", "x*y^2 + y"])).unwrap();
    let f = parse_poly(&r, "x^5 + 3*x*y^3 - y").unwrap();
    let g = parse_poly(&r, "x^3*y + 4*x^2 + 1").unwrap();
    let nf = |h: &Polynomial| normal_form(h, &gb).unwrap();
    assert_eq!(nf(&nf(&f)), nf(&f));
    assert_eq!(nf(&f.add(&g)), nf(&nf(&f).add(&nf(&g))));
}

#[test]
fn quotient_bases() {
    let r = ring(2, &["x", "y"], MonomialOrder::Grevlex);
    let QuotientBasis::Finite(b) =
        quotient_monomial_basis(&r, &polys(&r, &["x^2", "x*y", "y^2"])).unwrap()
    else {
        panic!()
    };
    let names: Vec<String> = b.iter().map(|m| r.format_monomial(m)).collect();
    assert_eq!(names, vec!["1", "y", "x"]);
    assert_eq!(
        quotient_monomial_basis(&r, &polys(&r, &["x"])).unwrap(),
        QuotientBasis::Infinite
    );
    let r1 = ring(2, &["x"], MonomialOrder::Grevlex);
    let QuotientBasis::Finite(b) = quotient_monomial_basis(&r1, &polys(&r1, &["x - 1"])).unwrap()
    else {
        panic!()
    };
    assert_eq!(b, vec![Monomial::one(1)]);
    let QuotientBasis::Finite(b) = quotient_monomial_basis(&r1, &polys(&r1, &["1"])).unwrap()
    else {
        panic!()
    };
    assert!(b.is_empty());
}

#[test]
fn module_kernel_examples() {
    let r = ring(2, &["x", "y"], MonomialOrder::Grevlex);
    let q = PolyQuotient::polynomial_ring(&r);
    let a = RingMatrix {
        rows: 1,
        cols: 2,
        entries: polys(&r, &["x", "y"]),
    };
    let k = module_kernel(&q, &a).unwrap();
    assert_eq!(k.len(), 1);
    let koszul = vector(&r, &["y", "x"]);
    assert!(submodule_contains(&q, &k, &koszul).unwrap());
    assert!(submodule_contains(&q, &[koszul], &k[0]).unwrap());

    let id = RingMatrix {
        rows: 1,
        cols: 1,
        entries: polys(&r, &["1"]),
    };
    assert!(module_kernel(&q, &id).unwrap().is_empty());
    let zero = RingMatrix {
        rows: 1,
        cols: 1,
        entries: polys(&r, &["0"]),
    };
    let k = module_kernel(&q, &zero).unwrap();
    assert!(submodule_contains(&q, &k, &vector(&r, &["1"])).unwrap());
}

#[test]
fn koszul_syzygies_of_three_variables() {
    let r = ring(3, &["x", "y", "z"], MonomialOrder::Grevlex);
    let q = PolyQuotient::polynomial_ring(&r);
    let a = RingMatrix {
        rows: 1,
        cols: 3,
        entries: polys(&r, &["x", "y", "z"]),
    };
    let k = module_kernel(&q, &a).unwrap();
    assert_eq!(k.len(), 3);
    for v in &k {
        assert!(apply_matrix(&q, &a, v).is_zero());
    }
    for s in [["y", "-x", "0"], ["z", "0", "-x"], ["0", "z", "-y"]] {
        assert!(submodule_contains(&q, &k, &vector(&r, &s)).unwrap());
    }
}

#[test]
fn kernel_over_a_quotient_ring() {
    // over F_2[x]/(x^2), the kernel of multiplication by x is (x)
    let r = ring(2, &["x"], MonomialOrder::Grevlex);
    let q = PolyQuotient::new(&r, polys(&r, &["x^2"])).unwrap();
    let a = RingMatrix {
        rows: 1,
        cols: 1,
        entries: polys(&r, &["x"]),
    };
    let k = module_kernel(&q, &a).unwrap();
    assert_eq!(k, vec![vector(&r, &["x"])]);
}

#[test]
fn submodule_membership_examples() {
    let r = ring(2, &["x", "y"], MonomialOrder::Grevlex);
    let q = PolyQuotient::polynomial_ring(&r);
    let gens = vec![vector(&r, &["y", "x"])];
    assert!(submodule_contains(&q, &gens, &vector(&r, &["x*y", "x^2"])).unwrap());
    assert!(!submodule_contains(&q, &gens, &vector(&r, &["1", "0"])).unwrap());
    assert!(submodule_contains(&q, &gens, &ModuleVector::zero(&r, 2)).unwrap());
    assert_eq!(
        submodule_contains(&q, &gens, &vector(&r, &["1"])),
        Err(Error::RankMismatch {
            expected: 2,
            found: 1
        })
    );
}
