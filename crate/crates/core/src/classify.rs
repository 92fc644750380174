//! Ring classifiers: GV-ideals and DW-rings, strong w-modules, the small
//! finitistic dimension by two independent methods, self-injective
//! dimension, (1,d)-rings in the sense of Mahdou, and Pruefer conditions.
//!
//! Finite-backend classifiers sweep the whole ideal lattice. Ext tables are
//! extended only as far as a verdict needs them, since syzygy ranks can grow
//! geometrically. Every negative verdict names a witness ideal.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finalg::{
    annihilator, enumerate_ideals, local_decompose, AlgIdeal, FiniteAlgebra, FiniteModule,
};
use crate::homology::{
    ext_dims_finite, ext_is_zero_poly, factor_resolutions, self_injective_dim_finite, ExtTable,
    InjDim,
};
use crate::koszul::{koszul_grade_finite, koszul_grade_poly, Grade};
use crate::polyalg::{quotient_monomial_basis, PolyQuotient, Polynomial, QuotientBasis};

/// A three-valued verdict for checks bounded by a cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    True,
    False,
    Inconclusive,
}

impl From<bool> for Verdict {
    fn from(b: bool) -> Self {
        if b {
            Verdict::True
        } else {
            Verdict::False
        }
    }
}

/// An ideal as it appears in reports.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealRef {
    pub dim: usize,
    pub generators: Vec<String>,
}

pub fn describe_ideal(r: &FiniteAlgebra, ideal: &AlgIdeal) -> IdealRef {
    IdealRef {
        dim: ideal.dim(),
        generators: ideal
            .small_generators(r)
            .iter()
            .map(|g| r.format_element(g))
            .collect(),
    }
}

fn describe_polys(gens: &[Polynomial]) -> IdealRef {
    IdealRef {
        dim: 0,
        generators: gens.iter().map(ToString::to_string).collect(),
    }
}

fn ext_of_quotient(r: &FiniteAlgebra, ideal: &AlgIdeal, cutoff: usize) -> Result<ExtTable> {
    ext_dims_finite(r, &FiniteModule::cyclic(r, ideal), cutoff)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GVVerdict {
    pub ideal: IdealRef,
    pub hom_zero: bool,
    pub ext1_zero: bool,
    pub is_gv: bool,
}

/// `Hom(R/J, R) = Ext^1(R/J, R) = 0`, with `Hom(R/J, R) = ann(J)`.
pub fn is_gv_ideal_finite(r: &FiniteAlgebra, ideal: &AlgIdeal) -> Result<GVVerdict> {
    let hom_zero = annihilator(r, ideal).is_zero();
    let ext1_zero = ext_of_quotient(r, ideal, 1)?.dims[1] == 0;
    Ok(GVVerdict {
        ideal: describe_ideal(r, ideal),
        hom_zero,
        ext1_zero,
        is_gv: hom_zero && ext1_zero,
    })
}

pub fn is_gv_ideal_poly(
    q: &PolyQuotient,
    gens: &[Polynomial],
    rank_bound: usize,
) -> Result<GVVerdict> {
    let hom_zero = ext_is_zero_poly(q, gens, 0, rank_bound)?;
    let ext1_zero = ext_is_zero_poly(q, gens, 1, rank_bound)?;
    Ok(GVVerdict {
        ideal: describe_polys(gens),
        hom_zero,
        ext1_zero,
        is_gv: hom_zero && ext1_zero,
    })
}

/// All GV-ideals, in lattice order.
pub fn gv_ideals(r: &FiniteAlgebra, budget: u128) -> Result<Vec<AlgIdeal>> {
    let mut out = Vec::new();
    for ideal in enumerate_ideals(r, budget)? {
        // Hom(R/J, R) != 0 already rules J out
        if annihilator(r, &ideal).is_zero() && is_gv_ideal_finite(r, &ideal)?.is_gv {
            out.push(ideal);
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DwVerdict {
    pub is_dw: bool,
    pub proper_gv_witness: Option<IdealRef>,
}

/// A DW-ring has no proper GV-ideal.
pub fn is_dw(r: &FiniteAlgebra, budget: u128) -> Result<DwVerdict> {
    let witness = gv_ideals(r, budget)?.into_iter().find(AlgIdeal::is_proper);
    Ok(DwVerdict {
        is_dw: witness.is_none(),
        proper_gv_witness: witness.map(|w| describe_ideal(r, &w)),
    })
}

/// Whether a proper ideal of a polynomial quotient ring is GV, which
/// certifies that the ring is not DW and has `fPD >= 2`.
pub fn dw_witness_poly(q: &PolyQuotient, gens: &[Polynomial], rank_bound: usize) -> Result<bool> {
    if gens.is_empty() {
        return Err(Error::EmptySequence);
    }
    if q.is_unit_ideal(gens)? {
        return Err(Error::ImproperIdeal);
    }
    Ok(is_gv_ideal_poly(q, gens, rank_bound)?.is_gv)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpdResult {
    pub value: usize,
    /// Largest Koszul grade of a maximal ideal on `R`.
    pub method_grade: usize,
    /// Least `d` such that every proper ideal has a nonzero `Ext^i(R/I, R)`
    /// with `i <= d`.
    pub method_ext: usize,
    pub agree: bool,
}

/// Small finitistic dimension of a finite ring.
pub fn fpd_finite(r: &FiniteAlgebra, d_max: usize, budget: u128) -> Result<FpdResult> {
    let regular = FiniteModule::regular(r);
    let mut method_grade = 0;
    for factor in local_decompose(r)? {
        let gens = factor.maximal_ideal.small_generators(r);
        let grade = if gens.is_empty() {
            // the zero ideal is maximal only in a field
            Grade::Finite(0)
        } else {
            koszul_grade_finite(r, &gens, &regular)?
        };
        match grade {
            Grade::Finite(g) => method_grade = method_grade.max(g),
            Grade::Infinite => unreachable!("maximal ideals are proper"),
        }
    }
    let mut method_ext = 0;
    for ideal in enumerate_ideals(r, budget)?
        .iter()
        .filter(|i| i.is_proper())
    {
        let first = if !annihilator(r, ideal).is_zero() {
            Some(0)
        } else {
            ext_of_quotient(r, ideal, d_max)?.first_nonzero()
        };
        match first {
            Some(i) => method_ext = method_ext.max(i),
            None => return Err(Error::CutoffInconclusive(d_max)),
        }
    }
    Ok(FpdResult {
        value: method_grade,
        method_grade,
        method_ext,
        agree: method_grade == method_ext,
    })
}

/// `max K.grade(m, R)` over the supplied maximal ideals: a lower bound for
/// `fPD(R)`. Each ideal must have an `F_p`-rational residue field.
pub fn fpd_lower_bound_poly(q: &PolyQuotient, maximal_ideals: &[Vec<Polynomial>]) -> Result<usize> {
    let mut best = 0;
    for gens in maximal_ideals {
        let mut all = gens.clone();
        all.extend(q.relations().iter().cloned());
        let rational = matches!(
            quotient_monomial_basis(q.ring(), &all)?,
            QuotientBasis::Finite(ref b) if b.len() == 1
        );
        if !rational {
            return Err(Error::NotMaximal(
                describe_polys(gens).generators.join(", "),
            ));
        }
        match koszul_grade_poly(q, gens)? {
            Grade::Finite(g) => best = best.max(g),
            Grade::Infinite => unreachable!("a rational maximal ideal is proper"),
        }
    }
    Ok(best)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WndVerdict {
    pub d: usize,
    pub cutoff: usize,
    pub fpd: usize,
    /// Every ideal with `Ext^i(R/I, R) = 0` for `i <= d` has all Ext
    /// vanishing through the cutoff and equals `R`.
    pub quantifier_holds: bool,
    /// `fPD(R) <= d` agrees with the quantifier.
    pub holds: bool,
    pub counterexample: Option<IdealRef>,
}

/// `fPD(R) <= d` iff vanishing of `Ext^(0..=d)(R/I, R)` forces all Ext to
/// vanish, checked over the whole ideal lattice.
pub fn verify_theorem_wnd(
    r: &FiniteAlgebra,
    d: usize,
    cutoff: usize,
    budget: u128,
) -> Result<WndVerdict> {
    let mut counterexample = None;
    for ideal in enumerate_ideals(r, budget)? {
        if !annihilator(r, &ideal).is_zero() {
            continue;
        }
        let low = ext_of_quotient(r, &ideal, d)?;
        if !low.vanishes_through(d) {
            continue;
        }
        let full = ext_of_quotient(r, &ideal, cutoff.max(d))?;
        if !(full.vanishes_through(cutoff.max(d)) && ideal.is_whole()) {
            counterexample = Some(describe_ideal(r, &ideal));
            break;
        }
    }
    let fpd = fpd_finite(r, cutoff.max(d), budget)?.value;
    let quantifier_holds = counterexample.is_none();
    Ok(WndVerdict {
        d,
        cutoff,
        fpd,
        quantifier_holds,
        holds: (fpd <= d) == quantifier_holds,
        counterexample,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StrongWVerdict {
    pub is_strong_w: bool,
    pub cutoff: usize,
    /// A GV-ideal `J` and an index `i >= 2` with `Ext^i(R/J, R) != 0`.
    pub witness: Option<(IdealRef, usize)>,
}

/// `R` as a strong w-module, tested on the cyclic GV-torsion modules `R/J`.
pub fn strong_w_check(r: &FiniteAlgebra, cutoff: usize, budget: u128) -> Result<StrongWVerdict> {
    for ideal in gv_ideals(r, budget)? {
        if let Some(i) = first_high_ext(&ext_of_quotient(r, &ideal, cutoff)?) {
            return Ok(StrongWVerdict {
                is_strong_w: false,
                cutoff,
                witness: Some((describe_ideal(r, &ideal), i)),
            });
        }
    }
    Ok(StrongWVerdict {
        is_strong_w: true,
        cutoff,
        witness: None,
    })
}

fn first_high_ext(t: &ExtTable) -> Option<usize> {
    t.dims
        .iter()
        .enumerate()
        .skip(2)
        .find(|(_, &x)| x != 0)
        .map(|(i, _)| i)
}

/// The same test over a polynomial quotient ring, on supplied candidate
/// ideals; candidates that are not GV are skipped.
pub fn strong_w_check_poly(
    q: &PolyQuotient,
    candidates: &[Vec<Polynomial>],
    cutoff: usize,
    rank_bound: usize,
) -> Result<StrongWVerdict> {
    for gens in candidates {
        if !is_gv_ideal_poly(q, gens, rank_bound)?.is_gv {
            continue;
        }
        for i in 2..=cutoff {
            if !ext_is_zero_poly(q, gens, i, rank_bound)? {
                return Ok(StrongWVerdict {
                    is_strong_w: false,
                    cutoff,
                    witness: Some((describe_polys(gens), i)),
                });
            }
        }
    }
    Ok(StrongWVerdict {
        is_strong_w: true,
        cutoff,
        witness: None,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Regularity {
    pub regular: bool,
    pub semiregular: bool,
}

/// Regular: contains a non-zerodivisor. In a finite ring an injective
/// multiplication map is bijective, so this means `I = R`.
/// Semiregular: `ann(I) = 0`.
pub fn ideal_regularity(r: &FiniteAlgebra, ideal: &AlgIdeal) -> Regularity {
    Regularity {
        regular: ideal.is_whole(),
        semiregular: annihilator(r, ideal).is_zero(),
    }
}

/// `I` is projective iff `pd(R/I) <= 1`. Minimal factor resolutions that
/// have not stopped by stage 1 have a non-free first syzygy.
pub fn is_projective_ideal(r: &FiniteAlgebra, ideal: &AlgIdeal, cutoff: usize) -> Result<Verdict> {
    let m = FiniteModule::cyclic(r, ideal);
    for res in factor_resolutions(r, &m, cutoff.min(1))? {
        if !res.complete {
            return Ok(if cutoff >= 1 {
                Verdict::False
            } else {
                Verdict::Inconclusive
            });
        }
    }
    Ok(Verdict::True)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PruferVerdict {
    pub prufer: Verdict,
    pub strong_prufer: Verdict,
    pub prufer_witness: Option<IdealRef>,
    pub strong_prufer_witness: Option<IdealRef>,
    /// Strong Pruefer implies Pruefer and DW.
    pub consistent: bool,
}

/// Pruefer: regular ideals are projective. Strong Pruefer: semiregular
/// ideals are projective.
pub fn prufer_classify(r: &FiniteAlgebra, cutoff: usize, budget: u128) -> Result<PruferVerdict> {
    let mut prufer = Verdict::True;
    let mut strong = Verdict::True;
    let mut prufer_witness = None;
    let mut strong_prufer_witness = None;
    for ideal in enumerate_ideals(r, budget)? {
        let reg = ideal_regularity(r, &ideal);
        if !reg.regular && !reg.semiregular {
            continue;
        }
        let proj = is_projective_ideal(r, &ideal, cutoff)?;
        let update = |v: &mut Verdict, w: &mut Option<IdealRef>| match proj {
            Verdict::True => {}
            Verdict::False => {
                if *v != Verdict::False {
                    *v = Verdict::False;
                    *w = Some(describe_ideal(r, &ideal));
                }
            }
            Verdict::Inconclusive => {
                if *v == Verdict::True {
                    *v = Verdict::Inconclusive;
                }
            }
        };
        if reg.regular {
            update(&mut prufer, &mut prufer_witness);
        }
        if reg.semiregular {
            update(&mut strong, &mut strong_prufer_witness);
        }
    }
    let consistent =
        strong != Verdict::True || (prufer == Verdict::True && is_dw(r, budget)?.is_dw);
    Ok(PruferVerdict {
        prufer,
        strong_prufer: strong,
        prufer_witness,
        strong_prufer_witness,
        consistent,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MahdouVerdict {
    pub d: usize,
    pub is_weak_1d: Verdict,
    pub fpd: usize,
    /// When `is_weak_1d` holds, `fPD(R) <= d`; vacuous otherwise.
    pub implies_fpd_le_d_verified: bool,
    pub witness: Option<IdealRef>,
}

/// Weak (1,d) in the sense of Mahdou, tested as `pd(R/I) <= d` for every
/// ideal `I`. A minimal factor resolution still running at stage `d`
/// settles the answer negatively.
pub fn weak_1d_mahdou_check(
    r: &FiniteAlgebra,
    d: usize,
    cutoff: usize,
    budget: u128,
) -> Result<MahdouVerdict> {
    let mut verdict = Verdict::True;
    let mut witness = None;
    for ideal in enumerate_ideals(r, budget)? {
        let m = FiniteModule::cyclic(r, &ideal);
        let terminated = factor_resolutions(r, &m, d.min(cutoff))?
            .iter()
            .all(|res| res.complete);
        if terminated {
            continue;
        }
        if d <= cutoff {
            verdict = Verdict::False;
            witness = Some(describe_ideal(r, &ideal));
            break;
        }
        verdict = Verdict::Inconclusive;
    }
    let fpd = fpd_finite(r, cutoff.max(d), budget)?.value;
    Ok(MahdouVerdict {
        d,
        is_weak_1d: verdict,
        fpd,
        implies_fpd_le_d_verified: verdict != Verdict::True || fpd <= d,
        witness,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FpdVsId {
    pub holds: bool,
    pub fpd: usize,
    pub id: InjDim,
    pub gorenstein_factors: Vec<bool>,
}

/// `fPD(R) <= id_R R`. For finite rings `FP-id_R R = id_R R`.
pub fn verify_fpd_le_selfinjdim(r: &FiniteAlgebra, cutoff: usize, budget: u128) -> Result<FpdVsId> {
    let fpd = fpd_finite(r, cutoff, budget)?.value;
    let sid = self_injective_dim_finite(r)?;
    let holds = match sid.value {
        InjDim::Zero => fpd == 0,
        InjDim::Infinity => true,
    };
    Ok(FpdVsId {
        holds,
        fpd,
        id: sid.value,
        gorenstein_factors: sid.gorenstein_factors,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifierReport {
    pub ring: String,
    pub dim: usize,
    pub modulus: u32,
    pub ideal_count: usize,
    pub fpd: FpdResult,
    pub gv_ideals: Vec<IdealRef>,
    pub is_dw: bool,
    pub strong_w_ok: bool,
    pub self_inj_dim: InjDim,
    pub gorenstein_factors: Vec<bool>,
    pub socle_dims: Vec<usize>,
    pub prufer: Verdict,
    pub strong_prufer: Verdict,
    pub witnesses: std::collections::BTreeMap<String, IdealRef>,
    /// `is_dw` iff `fPD <= 1`, and strong w iff DW.
    pub consistent: bool,
}

impl ClassifierReport {
    pub fn has_inconclusive(&self) -> bool {
        self.prufer == Verdict::Inconclusive || self.strong_prufer == Verdict::Inconclusive
    }
}

pub fn classify_ring(
    r: &FiniteAlgebra,
    description: &str,
    cutoff: usize,
    budget: u128,
) -> Result<ClassifierReport> {
    let ideal_count = enumerate_ideals(r, budget)?.len();
    let fpd = fpd_finite(r, cutoff, budget)?;
    let gv: Vec<IdealRef> = gv_ideals(r, budget)?
        .iter()
        .map(|i| describe_ideal(r, i))
        .collect();
    let dw = is_dw(r, budget)?;
    let sw = strong_w_check(r, cutoff, budget)?;
    let sid = self_injective_dim_finite(r)?;
    let pr = prufer_classify(r, cutoff, budget)?;
    let mut witnesses = std::collections::BTreeMap::new();
    if let Some(w) = dw.proper_gv_witness.clone() {
        witnesses.insert("not_dw".to_string(), w);
    }
    if let Some((w, _)) = sw.witness.clone() {
        witnesses.insert("not_strong_w".to_string(), w);
    }
    if let Some(w) = pr.prufer_witness.clone() {
        witnesses.insert("not_prufer".to_string(), w);
    }
    if let Some(w) = pr.strong_prufer_witness.clone() {
        witnesses.insert("not_strong_prufer".to_string(), w);
    }
    let locals = local_decompose(r)?;
    if sid.value == InjDim::Infinity {
        let bad = locals
            .iter()
            .find(|f| !f.is_gorenstein())
            .expect("a non-Gorenstein factor");
        witnesses.insert(
            "not_self_injective".to_string(),
            describe_ideal(r, &bad.maximal_ideal),
        );
    }
    let consistent = dw.is_dw == (fpd.value <= 1) && sw.is_strong_w == dw.is_dw && pr.consistent;
    Ok(ClassifierReport {
        ring: description.to_string(),
        dim: r.dim(),
        modulus: r.modulus(),
        ideal_count,
        fpd,
        gv_ideals: gv,
        is_dw: dw.is_dw,
        strong_w_ok: sw.is_strong_w,
        self_inj_dim: sid.value,
        gorenstein_factors: sid.gorenstein_factors,
        socle_dims: sid.socle_dims,
        prufer: pr.prufer,
        strong_prufer: pr.strong_prufer,
        witnesses,
        consistent,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finalg::{
        chain_ring, ideal_closure, truncated_polynomial_ring, whole_ring, ZeroDimQuotient,
    };
    use crate::homology::DEFAULT_RANK_BOUND;
    use crate::polyalg::{parse_poly, PolyRing};

    fn sym(q: &ZeroDimQuotient, name: &str) -> Vec<u32> {
        q.symbols().into_iter().find(|(n, _)| n == name).unwrap().1
    }

    fn poly(vars: &[&str]) -> PolyQuotient {
        PolyQuotient::polynomial_ring(
            &PolyRing::new(2, vars.iter().copied(), Default::default()).unwrap(),
        )
    }

    fn gens(q: &PolyQuotient, t: &[&str]) -> Vec<Polynomial> {
        t.iter().map(|s| parse_poly(q.ring(), s).unwrap()).collect()
    }

    fn trunc() -> ZeroDimQuotient {
        truncated_polynomial_ring(2, 2, 2).unwrap()
    }

    fn f2xf2() -> FiniteAlgebra {
        FiniteAlgebra::field_product(2, 2).unwrap()
    }

    #[test]
    fn gv_examples() {
        let c = chain_ring(2, 2).unwrap();
        let r = &c.algebra;
        assert!(is_gv_ideal_finite(r, &whole_ring(r)).unwrap().is_gv);
        let v = is_gv_ideal_finite(r, &ideal_closure(r, &[sym(&c, "x")])).unwrap();
        assert!(!v.hom_zero && !v.is_gv);

        let q = poly(&["x", "y"]);
        assert!(
            is_gv_ideal_poly(&q, &gens(&q, &["x", "y"]), 64)
                .unwrap()
                .is_gv
        );
    }

    #[test]
    fn dw_examples() {
        assert!(
            is_dw(&chain_ring(2, 2).unwrap().algebra, 4096)
                .unwrap()
                .is_dw
        );
        assert!(is_dw(&trunc().algebra, 4096).unwrap().is_dw);
        assert!(
            is_dw(&chain_ring(2, 1).unwrap().algebra, 4096)
                .unwrap()
                .is_dw
        );

        let q = poly(&["x", "y"]);
        assert!(dw_witness_poly(&q, &gens(&q, &["x", "y"]), 64).unwrap());
        assert!(!dw_witness_poly(&q, &gens(&q, &["x"]), 64).unwrap());
        let q1 = poly(&["x"]);
        assert!(!dw_witness_poly(&q1, &gens(&q1, &["x"]), 64).unwrap());
        assert_eq!(
            dw_witness_poly(&q, &gens(&q, &["x", "1"]), 64),
            Err(Error::ImproperIdeal)
        );
    }

    #[test]
    fn fpd_examples() {
        for r in [trunc().algebra, f2xf2(), chain_ring(3, 3).unwrap().algebra] {
            let f = fpd_finite(&r, 6, 4096).unwrap();
            assert_eq!((f.value, f.method_ext, f.agree), (0, 0, true));
        }
        let q = poly(&["x", "y", "z"]);
        let m = |t: &[&str]| vec![gens(&q, t)];
        assert_eq!(fpd_lower_bound_poly(&q, &m(&["x", "y", "z"])).unwrap(), 3);
        assert_eq!(
            fpd_lower_bound_poly(&q, &m(&["x-1", "y", "z+1"])).unwrap(),
            3
        );
        assert!(matches!(
            fpd_lower_bound_poly(&q, &m(&["x", "y"])),
            Err(Error::NotMaximal(_))
        ));
        let q1 = poly(&["x"]);
        assert_eq!(fpd_lower_bound_poly(&q1, &[gens(&q1, &["x"])]).unwrap(), 1);
    }

    #[test]
    fn wnd_examples() {
        for r in [trunc().algebra, chain_ring(2, 2).unwrap().algebra, f2xf2()] {
            let v = verify_theorem_wnd(&r, 0, 5, 4096).unwrap();
            assert!(v.holds && v.quantifier_holds && v.counterexample.is_none());
        }
    }

    #[test]
    fn strong_w_examples() {
        assert!(
            strong_w_check(&chain_ring(2, 2).unwrap().algebra, 5, 4096)
                .unwrap()
                .is_strong_w
        );
        assert!(
            strong_w_check(&chain_ring(2, 1).unwrap().algebra, 5, 4096)
                .unwrap()
                .is_strong_w
        );
        let q = poly(&["x", "y"]);
        let v = strong_w_check_poly(&q, &[gens(&q, &["x", "y"])], 3, DEFAULT_RANK_BOUND).unwrap();
        assert!(!v.is_strong_w);
        assert_eq!(v.witness.unwrap().1, 2);
    }

    #[test]
    fn regularity_and_projectivity() {
        let t = trunc();
        let r = &t.algebra;
        assert_eq!(
            ideal_regularity(r, &whole_ring(r)),
            Regularity {
                regular: true,
                semiregular: true
            }
        );
        let m = ideal_closure(r, &[sym(&t, "x"), sym(&t, "y")]);
        assert_eq!(
            ideal_regularity(r, &m),
            Regularity {
                regular: false,
                semiregular: false
            }
        );
        let f = f2xf2();
        let e1 = ideal_closure(&f, &[vec![1, 0]]);
        assert_eq!(
            ideal_regularity(&f, &e1),
            Regularity {
                regular: false,
                semiregular: false
            }
        );
        assert_eq!(is_projective_ideal(&f, &e1, 6), Ok(Verdict::True));
        assert_eq!(
            is_projective_ideal(&f, &whole_ring(&f), 6),
            Ok(Verdict::True)
        );
        let c = chain_ring(2, 2).unwrap();
        let x = ideal_closure(&c.algebra, &[sym(&c, "x")]);
        assert_eq!(is_projective_ideal(&c.algebra, &x, 6), Ok(Verdict::False));
        assert_eq!(
            is_projective_ideal(&c.algebra, &x, 0),
            Ok(Verdict::Inconclusive)
        );
    }

    #[test]
    fn prufer_examples() {
        for r in [trunc().algebra, f2xf2(), chain_ring(3, 3).unwrap().algebra] {
            let v = prufer_classify(&r, 6, 4096).unwrap();
            assert_eq!((v.prufer, v.strong_prufer), (Verdict::True, Verdict::True));
            assert!(v.consistent && v.prufer_witness.is_none());
        }
    }

    #[test]
    fn mahdou_examples() {
        let v = weak_1d_mahdou_check(&f2xf2(), 0, 6, 4096).unwrap();
        assert_eq!((v.is_weak_1d, v.fpd), (Verdict::True, 0));
        assert!(v.implies_fpd_le_d_verified);
        let v = weak_1d_mahdou_check(&chain_ring(2, 2).unwrap().algebra, 1, 6, 4096).unwrap();
        assert_eq!(v.is_weak_1d, Verdict::False);
        assert!(v.witness.is_some() && v.implies_fpd_le_d_verified);
        let v = weak_1d_mahdou_check(&chain_ring(2, 2).unwrap().algebra, 8, 6, 4096).unwrap();
        assert_eq!(v.is_weak_1d, Verdict::Inconclusive);
        let v = weak_1d_mahdou_check(&chain_ring(2, 1).unwrap().algebra, 0, 6, 4096).unwrap();
        assert_eq!((v.is_weak_1d, v.fpd), (Verdict::True, 0));
    }

    #[test]
    fn fpd_versus_self_injective_dimension() {
        let v = verify_fpd_le_selfinjdim(&chain_ring(2, 2).unwrap().algebra, 6, 4096).unwrap();
        assert_eq!((v.holds, v.fpd, v.id), (true, 0, InjDim::Zero));
        let v = verify_fpd_le_selfinjdim(&trunc().algebra, 6, 4096).unwrap();
        assert_eq!((v.holds, v.fpd, v.id), (true, 0, InjDim::Infinity));
        let v = verify_fpd_le_selfinjdim(&f2xf2(), 6, 4096).unwrap();
        assert_eq!((v.holds, v.fpd, v.id), (true, 0, InjDim::Zero));
    }

    #[test]
    fn classifier_reports() {
        let rep = classify_ring(&trunc().algebra, "trunc", 6, 4096).unwrap();
        assert_eq!(rep.fpd.value, 0);
        assert!(rep.is_dw && rep.consistent);
        assert_eq!(rep.self_inj_dim, InjDim::Infinity);
        assert_eq!(rep.prufer, Verdict::True);
        assert!(rep.witnesses.contains_key("not_self_injective"));
        let rep = classify_ring(&f2xf2(), "f2xf2", 6, 4096).unwrap();
        assert_eq!((rep.fpd.value, rep.self_inj_dim), (0, InjDim::Zero));
        assert!(rep.witnesses.is_empty());
    }
}
