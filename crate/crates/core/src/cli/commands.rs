//! Command bodies. Each returns the `results` payload of a report and its
//! status.

use serde_json::{json, Value};

use crate::classify::{
    classify_ring, dw_witness_poly, fpd_finite, fpd_lower_bound_poly, is_gv_ideal_poly,
    strong_w_check_poly, verify_fpd_le_selfinjdim, weak_1d_mahdou_check, Verdict,
};
use crate::error::{Error, Result};
use crate::finalg::{
    annihilator, enumerate_ideals, ideal_closure, local_decompose, FiniteAlgebra, FiniteModule,
};
use crate::homology::{ext_dims_finite, ext_is_zero_poly, pd_cutoff};
use crate::koszul::{
    build_koszul, koszul_cohomology_vanishes, koszul_grade_finite, koszul_grade_poly,
    koszul_homology, Grade,
};
use crate::polyalg::{quotient_monomial_basis, PolyQuotient, Polynomial, QuotientBasis};

use super::report::Status;
use super::spec::{build_ring, parse_finite_elements, parse_poly_elements, BuiltRing, RingSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Options {
    pub cutoff: usize,
    pub budget: u128,
    pub seed: u64,
    pub rank_bound: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options {
            cutoff: crate::homology::DEFAULT_CUTOFF,
            budget: 4096,
            seed: 0,
            rank_bound: crate::homology::DEFAULT_RANK_BOUND,
        }
    }
}

pub type Outcome = (Value, Status);

fn strings(xs: &[Polynomial]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}

fn finite_strings(r: &FiniteAlgebra, xs: &[Vec<u32>]) -> Vec<String> {
    xs.iter().map(|x| r.format_element(x)).collect()
}

/// Split `a,b;c,d` into generator lists, one per ideal.
pub fn split_ideals(values: &[String]) -> Vec<String> {
    values
        .iter()
        .flat_map(|v| v.split(';'))
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect()
}

pub fn ring_show(ring: &BuiltRing, opts: &Options) -> Result<Outcome> {
    match ring {
        BuiltRing::Finite {
            algebra: r,
            symbols,
            description,
        } => {
            let d = r.dim();
            let table: Vec<Vec<String>> = (0..d)
                .map(|i| {
                    (0..d)
                        .map(|j| r.format_element(&r.mul_table()[i][j]))
                        .collect()
                })
                .collect();
            let factors: Vec<Value> = local_decompose(r)?
                .iter()
                .map(|f| {
                    json!({
                        "idempotent": r.format_element(&f.idempotent),
                        "dim": f.algebra.dim(),
                        "residue_degree": f.residue_degree,
                        "socle_dim": f.socle_dim,
                        "gorenstein": f.is_gorenstein(),
                    })
                })
                .collect();
            let ideal_count = match enumerate_ideals(r, opts.budget) {
                Ok(ideals) => json!(ideals.len()),
                Err(Error::BudgetExceeded { .. }) => Value::Null,
                Err(e) => return Err(e),
            };
            Ok((
                json!({
                    "backend": "finite",
                    "description": description,
                    "modulus": r.modulus(),
                    "dim": d,
                    "basis": r.basis_names(),
                    "symbols": symbols.iter().map(|(n, _)| n).collect::<Vec<_>>(),
                    "unit": r.format_element(r.unit()),
                    "products": table,
                    "local_factors": factors,
                    "ideal_count": ideal_count,
                }),
                Status::Ok,
            ))
        }
        BuiltRing::Poly {
            quotient: q,
            description,
        } => {
            let basis = match quotient_monomial_basis(q.ring(), q.relations())? {
                QuotientBasis::Finite(b) => json!(b
                    .iter()
                    .map(|m| q.ring().format_monomial(m))
                    .collect::<Vec<_>>()),
                QuotientBasis::Infinite => json!("infinite"),
            };
            Ok((
                json!({
                    "backend": "poly",
                    "description": description,
                    "modulus": q.ring().modulus(),
                    "variables": q.ring().vars(),
                    "order": format!("{:?}", q.ring().order()).to_lowercase(),
                    "relation_gb": strings(q.relation_gb()),
                    "standard_monomials": basis,
                }),
                Status::Ok,
            ))
        }
    }
}

pub fn koszul(ring: &BuiltRing, elements: &str, quotient: Option<&str>) -> Result<Outcome> {
    match ring {
        BuiltRing::Finite {
            algebra: r,
            symbols,
            ..
        } => {
            let x = parse_finite_elements(r, symbols, elements)?;
            let (label, m) = match quotient {
                None => ("R".to_string(), FiniteModule::regular(r)),
                Some(text) => {
                    let gens = parse_finite_elements(r, symbols, text)?;
                    (
                        format!("R/({})", finite_strings(r, &gens).join(", ")),
                        FiniteModule::cyclic(r, &ideal_closure(r, &gens)),
                    )
                }
            };
            let k = build_koszul(r, &x)?;
            let table = koszul_homology(&k, &m)?;
            let status = if table.duality_holds() {
                Status::Ok
            } else {
                Status::Violation
            };
            Ok((
                json!({
                    "sequence": finite_strings(r, &x),
                    "module": label,
                    "ranks": k.ranks(),
                    "homology": table,
                    "duality_holds": table.duality_holds(),
                    "grade": table.grade().to_string(),
                }),
                status,
            ))
        }
        BuiltRing::Poly { quotient: q, .. } => {
            if quotient.is_some() {
                return Err(Error::BackendMismatch(
                    "quotient modules need a finite ring".into(),
                ));
            }
            let x = parse_poly_elements(q, elements)?;
            let k = build_koszul(q, &x)?;
            let vanishes = (0..=k.len())
                .map(|p| koszul_cohomology_vanishes(&k, p))
                .collect::<Result<Vec<_>>>()?;
            let grade = vanishes
                .iter()
                .position(|v| !v)
                .map_or(Grade::Infinite, Grade::Finite);
            Ok((
                json!({
                    "sequence": strings(&x),
                    "module": "R",
                    "ranks": k.ranks(),
                    "cohomology_vanishes": vanishes,
                    "grade": grade.to_string(),
                }),
                Status::Ok,
            ))
        }
    }
}

pub fn grade(ring: &BuiltRing, ideal: &str) -> Result<Outcome> {
    let (gens, g) = match ring {
        BuiltRing::Finite {
            algebra: r,
            symbols,
            ..
        } => {
            let x = parse_finite_elements(r, symbols, ideal)?;
            let g = koszul_grade_finite(r, &x, &FiniteModule::regular(r))?;
            (finite_strings(r, &x), g)
        }
        BuiltRing::Poly { quotient: q, .. } => {
            let x = parse_poly_elements(q, ideal)?;
            let g = koszul_grade_poly(q, &x)?;
            (strings(&x), g)
        }
    };
    Ok((
        json!({ "ideal": gens, "module": "R", "grade": g.to_string() }),
        Status::Ok,
    ))
}

pub fn ext(ring: &BuiltRing, ideal: &str, opts: &Options) -> Result<Outcome> {
    match ring {
        BuiltRing::Finite {
            algebra: r,
            symbols,
            ..
        } => {
            let gens = parse_finite_elements(r, symbols, ideal)?;
            let i = ideal_closure(r, &gens);
            let m = FiniteModule::cyclic(r, &i);
            let table = ext_dims_finite(r, &m, opts.cutoff)?;
            let pd = pd_cutoff(r, &m, opts.cutoff)?;
            Ok((
                json!({
                    "ideal": finite_strings(r, &gens),
                    "module": "R/I",
                    "cutoff": opts.cutoff,
                    "ext_dims": table.dims,
                    "first_nonzero": table.first_nonzero(),
                    "ann_dim": annihilator(r, &i).dim(),
                    "pd": pd,
                }),
                Status::Ok,
            ))
        }
        BuiltRing::Poly { quotient: q, .. } => {
            let gens = parse_poly_elements(q, ideal)?;
            let zero = (0..=opts.cutoff)
                .map(|i| ext_is_zero_poly(q, &gens, i, opts.rank_bound))
                .collect::<Result<Vec<_>>>()?;
            Ok((
                json!({
                    "ideal": strings(&gens),
                    "module": "R/I",
                    "cutoff": opts.cutoff,
                    "ext_vanishes": zero,
                    "first_nonzero": zero.iter().position(|z| !z),
                }),
                Status::Ok,
            ))
        }
    }
}

pub fn fpd(ring: &BuiltRing, maximal: &[String], opts: &Options) -> Result<Outcome> {
    match ring {
        BuiltRing::Finite { algebra: r, .. } => {
            let res = fpd_finite(r, opts.cutoff, opts.budget)?;
            let status = if res.agree {
                Status::Ok
            } else {
                Status::Violation
            };
            Ok((json!({ "fpd": res, "exact": true }), status))
        }
        BuiltRing::Poly { quotient: q, .. } => {
            let ideals = split_ideals(maximal)
                .iter()
                .map(|m| parse_poly_elements(q, m))
                .collect::<Result<Vec<_>>>()?;
            if ideals.is_empty() {
                return Err(Error::BackendMismatch(
                    "polynomial rings need --maximal ideals for a lower bound".into(),
                ));
            }
            let bound = fpd_lower_bound_poly(q, &ideals)?;
            Ok((
                json!({
                    "maximal_ideals": ideals.iter().map(|g| strings(g)).collect::<Vec<_>>(),
                    "fpd_lower_bound": bound,
                    "exact": false,
                }),
                Status::Ok,
            ))
        }
    }
}

/// `weak_d` is the `d` of the (1,d) check, by default the computed `fPD`.
pub fn classify(
    ring: &BuiltRing,
    ideals: &[String],
    weak_d: Option<usize>,
    opts: &Options,
) -> Result<Outcome> {
    match ring {
        BuiltRing::Finite {
            algebra: r,
            description,
            ..
        } => {
            let report = classify_ring(r, description, opts.cutoff, opts.budget)?;
            let d = weak_d.unwrap_or(report.fpd.value);
            let mahdou = weak_1d_mahdou_check(r, d, opts.cutoff, opts.budget)?;
            let vs_id = verify_fpd_le_selfinjdim(r, opts.cutoff, opts.budget)?;
            let sound = report.consistent
                && report.fpd.agree
                && mahdou.implies_fpd_le_d_verified
                && vs_id.holds;
            let status = if !sound {
                Status::Violation
            } else if report.has_inconclusive() || mahdou.is_weak_1d == Verdict::Inconclusive {
                Status::Inconclusive
            } else {
                Status::Ok
            };
            Ok((
                json!({ "report": report, "weak_1d": mahdou, "fpd_vs_id": vs_id }),
                status,
            ))
        }
        BuiltRing::Poly { quotient: q, .. } => poly_classify(q, ideals, opts),
    }
}

fn poly_classify(q: &PolyQuotient, ideals: &[String], opts: &Options) -> Result<Outcome> {
    let candidates = split_ideals(ideals)
        .iter()
        .map(|m| parse_poly_elements(q, m))
        .collect::<Result<Vec<_>>>()?;
    if candidates.is_empty() {
        return Err(Error::BackendMismatch(
            "polynomial rings need explicit --ideal candidates".into(),
        ));
    }
    let mut gv = Vec::new();
    let mut not_dw = None;
    for gens in &candidates {
        let v = is_gv_ideal_poly(q, gens, opts.rank_bound)?;
        if not_dw.is_none() && v.is_gv && dw_witness_poly(q, gens, opts.rank_bound)? {
            not_dw = Some(v.ideal.clone());
        }
        gv.push(v);
    }
    let sw = strong_w_check_poly(q, &candidates, opts.cutoff, opts.rank_bound)?;
    Ok((
        json!({
            "gv": gv,
            "not_dw_witness": not_dw,
            "fpd_at_least_2": not_dw.is_some(),
            "strong_w": sw,
        }),
        Status::Ok,
    ))
}

fn family(name: &str, extra: Value) -> RingSpec {
    let mut v = json!({ "kind": "family", "name": name });
    v.as_object_mut()
        .unwrap()
        .extend(extra.as_object().unwrap().clone());
    serde_json::from_value(v).expect("well-formed built-in spec")
}

/// The worked examples: truncated, product, chain and idealization rings
/// over the finite backend, and `F_2[x,y]` over the polynomial one.
pub fn examples_table(opts: &Options) -> Result<Outcome> {
    let specs = vec![
        family("trunc", json!({"p": 2, "n": 2, "deg": 2})),
        family("field_product", json!({"p": 2, "m": 2})),
        family("field_product", json!({"p": 3, "m": 2})),
        family("chain", json!({"p": 2, "k": 2})),
        family("chain", json!({"p": 3, "k": 3})),
        family(
            "idealization",
            json!({"base": {"kind": "family", "name": "chain", "p": 2, "k": 1},
                   "module": {"type": "regular"}}),
        ),
        family(
            "idealization",
            json!({"base": {"kind": "family", "name": "chain", "p": 2, "k": 2},
                   "module": {"type": "residue"}}),
        ),
    ];
    let mut rows = Vec::new();
    let mut status = Status::Ok;
    for spec in &specs {
        let built = build_ring(spec)?;
        let (r, _) = built.finite()?;
        let (value, s) = classify(&built, &[], None, opts)?;
        status = status.max(s);
        let rep = &value["report"];
        rows.push(json!({
            "ring": built.description(),
            "dim": r.dim(),
            "ideals": rep["ideal_count"],
            "fpd": rep["fpd"]["value"],
            "is_dw": rep["is_dw"],
            "self_injective_dim": rep["self_inj_dim"],
            "socle_dims": rep["socle_dims"],
            "prufer": rep["prufer"],
            "strong_prufer": rep["strong_prufer"],
        }));
    }
    let poly: RingSpec =
        serde_json::from_value(json!({"kind": "poly", "p": 2, "variables": ["x", "y"]}))
            .expect("well-formed built-in spec");
    let built = build_ring(&poly)?;
    let BuiltRing::Poly { quotient: q, .. } = &built else {
        unreachable!()
    };
    let m = parse_poly_elements(q, "x, y")?;
    let bound = fpd_lower_bound_poly(q, std::slice::from_ref(&m))?;
    let witness = dw_witness_poly(q, &m, opts.rank_bound)?;
    rows.push(json!({
        "ring": built.description(),
        "fpd_lower_bound": bound,
        "is_dw": !witness,
        "gv_witness": strings(&m),
    }));
    Ok((json!({ "rows": rows }), status))
}
