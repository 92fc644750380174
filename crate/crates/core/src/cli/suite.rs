//! Batch verification of the structural identities over a seeded corpus.

use std::collections::BTreeMap;
use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::classify::{
    dw_witness_poly, fpd_finite, fpd_lower_bound_poly, is_dw, prufer_classify, strong_w_check,
    verify_fpd_le_selfinjdim, verify_theorem_wnd, weak_1d_mahdou_check,
};
use crate::corpus::{named_corpus, random_corpus, random_element, random_module, CorpusRing};
use crate::error::Result;
use crate::finalg::{ideal_closure, FiniteAlgebra};
use crate::homology::{baer_self_injective, self_injective_dim_finite, InjDim};
use crate::koszul::{build_koszul, koszul_grade_finite, koszul_grade_poly, koszul_homology, Grade};
use crate::polyalg::{parse_poly, PolyQuotient, PolyRing};

/// Deliberate corruptions for exercising the failure path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "snake_case")]
pub enum Fault {
    Duality,
}

#[derive(Debug, Clone)]
pub struct SuiteOptions {
    pub seed: u64,
    pub random_count: usize,
    pub max_dim: usize,
    pub cutoff: usize,
    pub budget: u128,
    pub rank_bound: usize,
    pub extra: Vec<CorpusRing>,
    pub fault: Option<Fault>,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            seed: 0,
            random_count: 100,
            max_dim: 4,
            cutoff: 5,
            budget: 4096,
            rank_bound: crate::homology::DEFAULT_RANK_BOUND,
            extra: Vec::new(),
            fault: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    /// The failing case on the smallest ring.
    pub counterexample: Option<Value>,
}

impl CheckOutcome {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteResult {
    pub corpus_size: usize,
    pub checks: Vec<CheckOutcome>,
    pub all_passed: bool,
}

struct Check {
    name: &'static str,
    cases: usize,
    failures: usize,
    smallest: Option<(usize, Value)>,
}

impl Check {
    fn new(name: &'static str) -> Self {
        Check {
            name,
            cases: 0,
            failures: 0,
            smallest: None,
        }
    }

    fn record(&mut self, ok: bool, size: usize, detail: impl FnOnce() -> Value) {
        self.cases += 1;
        if ok {
            return;
        }
        self.failures += 1;
        if self.smallest.as_ref().is_none_or(|(s, _)| size < *s) {
            self.smallest = Some((size, detail()));
        }
    }

    fn finish(self) -> CheckOutcome {
        CheckOutcome {
            name: self.name.to_string(),
            cases: self.cases,
            failures: self.failures,
            counterexample: self.smallest.map(|(_, v)| v),
        }
    }
}

fn ring_json(c: &CorpusRing) -> Value {
    json!({ "name": c.name, "structure_constants": c.algebra.to_structure_constants() })
}

fn strings(r: &FiniteAlgebra, xs: &[Vec<u32>]) -> Vec<String> {
    xs.iter().map(|x| r.format_element(x)).collect()
}

fn koszul_checks(
    corpus: &[CorpusRing],
    opts: &SuiteOptions,
    duality: &mut Check,
    endpoints: &mut Check,
    independence: &mut Check,
) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed ^ 0x6b6f_737a);
    for c in corpus {
        let r = &c.algebra;
        for n in 1..=3 {
            let x: Vec<Vec<u32>> = (0..n).map(|_| random_element(&mut rng, r)).collect();
            let (label, m) = random_module(&mut rng, r);
            let k = build_koszul(r, &x)?;
            let mut table = koszul_homology(&k, &m)?;
            let gx = table.grade();
            if opts.fault == Some(Fault::Duality) {
                table.dims_cohomology[n] += 1;
            }
            let detail = |extra: Value| {
                json!({
                    "ring": ring_json(c),
                    "sequence": strings(r, &x),
                    "module": label,
                    "table": table,
                    "expected": extra,
                })
            };
            duality.record(table.duality_holds(), r.dim(), || detail(Value::Null));

            let ideal = ideal_closure(r, &x);
            let h0 = m.dim() - m.ideal_times(&ideal).dim();
            let hn = m.common_kernel(&x).dim();
            endpoints.record(
                table.dims_homology[0] == h0 && table.dims_homology[n] == hn,
                r.dim(),
                || detail(json!({ "h0": h0, "hn": hn })),
            );

            // same ideal, different generators: add a combination, shuffle,
            // or pass to a canonical small generating set
            let mut y = x.clone();
            match rng.gen_range(0..3) {
                0 => {
                    let a = random_element(&mut rng, r);
                    let b = random_element(&mut rng, r);
                    let i = rng.gen_range(0..n);
                    let j = rng.gen_range(0..n);
                    y.push(r.add(&r.mul(&a, &x[i]), &r.mul(&b, &x[j])));
                }
                1 => y.shuffle(&mut rng),
                _ => y = ideal.small_generators(r),
            }
            let gy = if y.is_empty() {
                // the zero ideal kills every module
                if m.is_zero() {
                    Grade::Infinite
                } else {
                    Grade::Finite(0)
                }
            } else {
                koszul_grade_finite(r, &y, &m)?
            };
            independence.record(gx == gy, r.dim(), || {
                detail(json!({ "other_generators": strings(r, &y), "grades": [gx, gy] }))
            });
        }
    }
    Ok(())
}

fn poly_ring(p: u64, vars: &[&str], rels: &[&str]) -> Result<PolyQuotient> {
    let ring = PolyRing::new(p, vars.iter().copied(), Default::default())?;
    let rels = rels
        .iter()
        .map(|r| parse_poly(&ring, r))
        .collect::<Result<Vec<_>>>()?;
    PolyQuotient::new(&ring, rels)
}

/// Pairs of generating sets of one ideal over polynomial rings.
pub const POLY_GRADE_PAIRS: &[(u64, &[&str], &[&str], &str, &str)] = &[
    (2, &["x", "y"], &[], "x, y", "x, y, x + y"),
    (2, &["x", "y"], &[], "x", "x, x*y"),
    (3, &["x", "y"], &[], "x, y", "x + y, y"),
    (3, &["x", "y", "z"], &[], "x, y", "x + y, x - y, x*z"),
    (2, &["x", "y", "z"], &[], "x, y, z", "x + y, y + z, z"),
    (2, &["x", "y"], &["x*y"], "x, y", "x + y, x, y^2"),
    (2, &["x", "y"], &["x^2"], "x", "x, x*y"),
    (3, &["x"], &[], "x^2", "x^2, x^3"),
];

fn poly_checks(
    opts: &SuiteOptions,
    independence: &mut Check,
    regular: &mut Check,
    contra: &mut Check,
) -> Result<()> {
    for &(p, vars, rels, a, b) in POLY_GRADE_PAIRS {
        let q = poly_ring(p, vars, rels)?;
        let ga = koszul_grade_poly(&q, &parse_list(&q, a)?)?;
        let gb = koszul_grade_poly(&q, &parse_list(&q, b)?)?;
        independence.record(ga == gb, vars.len(), || {
            json!({ "p": p, "variables": vars, "relations": rels, "ideals": [a, b], "grades": [ga, gb] })
        });
    }
    for n in 1..=3 {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let q = poly_ring(2, &refs, &[])?;
        let g = koszul_grade_poly(&q, &parse_list(&q, &names.join(","))?)?;
        regular.record(g == Grade::Finite(n), n, || json!({ "n": n, "grade": g }));
    }
    let q = poly_ring(2, &["x", "y"], &[])?;
    let m = parse_list(&q, "x, y")?;
    let witness = dw_witness_poly(&q, &m, opts.rank_bound)?;
    let bound = fpd_lower_bound_poly(&q, &[m])?;
    contra.record(witness && bound >= 2, 2, || {
        json!({ "ring": "F_2[x,y]", "ideal": "x, y", "gv_witness": witness, "fpd_lower_bound": bound })
    });
    Ok(())
}

fn parse_list(q: &PolyQuotient, text: &str) -> Result<Vec<crate::polyalg::Polynomial>> {
    crate::cli::spec::parse_poly_elements(q, text)
}

fn lattice_checks(corpus: &[CorpusRing], opts: &SuiteOptions) -> Result<Vec<Check>> {
    let mut wnd = Check::new("fpd_characterized_by_ext_vanishing");
    let mut dw = Check::new("dw_iff_fpd_at_most_1");
    let mut sw = Check::new("strong_w_iff_dw");
    let mut fid = Check::new("fpd_at_most_self_injective_dim");
    let mut agree = Check::new("fpd_grade_and_ext_methods_agree");
    let mut gor = Check::new("gorenstein_iff_baer_injective");
    let mut pruf = Check::new("strong_prufer_implies_prufer_and_dw");
    let mut mahdou = Check::new("weak_1d_implies_fpd_at_most_d");
    for c in corpus {
        let r = &c.algebra;
        let size = r.dim();
        let fpd = fpd_finite(r, opts.cutoff, opts.budget)?;
        agree.record(
            fpd.agree,
            size,
            || json!({ "ring": ring_json(c), "fpd": fpd }),
        );
        let v = verify_theorem_wnd(r, fpd.value, opts.cutoff, opts.budget)?;
        wnd.record(
            v.holds,
            size,
            || json!({ "ring": ring_json(c), "verdict": v }),
        );
        let d = is_dw(r, opts.budget)?;
        dw.record(
            d.is_dw == (fpd.value <= 1),
            size,
            || json!({ "ring": ring_json(c), "dw": d, "fpd": fpd.value }),
        );
        let s = strong_w_check(r, opts.cutoff, opts.budget)?;
        sw.record(
            s.is_strong_w == d.is_dw,
            size,
            || json!({ "ring": ring_json(c), "strong_w": s, "dw": d }),
        );
        let f = verify_fpd_le_selfinjdim(r, opts.cutoff, opts.budget)?;
        fid.record(
            f.holds,
            size,
            || json!({ "ring": ring_json(c), "verdict": f }),
        );
        let sid = self_injective_dim_finite(r)?;
        let baer = baer_self_injective(r, opts.budget)?;
        gor.record(
            (sid.value == InjDim::Zero) == baer,
            size,
            || json!({ "ring": ring_json(c), "self_injective_dim": sid, "baer": baer }),
        );
        let p = prufer_classify(r, opts.cutoff, opts.budget)?;
        pruf.record(
            p.consistent,
            size,
            || json!({ "ring": ring_json(c), "verdict": p }),
        );
        let m = weak_1d_mahdou_check(r, fpd.value, opts.cutoff, opts.budget)?;
        mahdou.record(
            m.implies_fpd_le_d_verified,
            size,
            || json!({ "ring": ring_json(c), "verdict": m }),
        );
    }
    Ok(vec![wnd, dw, sw, fid, agree, gor, pruf, mahdou])
}

/// Run every check; timings per check group are returned separately so
/// the result itself is reproducible.
pub fn run_suite(opts: &SuiteOptions) -> Result<(SuiteResult, BTreeMap<String, f64>)> {
    let mut corpus = named_corpus()?;
    corpus.extend(random_corpus(opts.seed, opts.random_count, opts.max_dim)?);
    corpus.extend(opts.extra.iter().cloned());
    let mut timings = BTreeMap::new();

    let start = Instant::now();
    let mut duality = Check::new("koszul_duality");
    let mut endpoints = Check::new("koszul_endpoints");
    let mut independence = Check::new("grade_independent_of_generators");
    koszul_checks(
        &corpus,
        opts,
        &mut duality,
        &mut endpoints,
        &mut independence,
    )?;
    timings.insert("koszul".to_string(), start.elapsed().as_secs_f64());

    let start = Instant::now();
    let mut poly_independence = Check::new("poly_grade_independent_of_generators");
    let mut regular = Check::new("poly_regular_sequence_grades");
    let mut contra = Check::new("poly_gv_witness_forces_fpd_at_least_2");
    poly_checks(opts, &mut poly_independence, &mut regular, &mut contra)?;
    timings.insert("poly".to_string(), start.elapsed().as_secs_f64());

    let start = Instant::now();
    let lattice = lattice_checks(&corpus, opts)?;
    timings.insert("lattice".to_string(), start.elapsed().as_secs_f64());

    let checks: Vec<CheckOutcome> = [
        duality,
        endpoints,
        independence,
        poly_independence,
        regular,
        contra,
    ]
    .into_iter()
    .chain(lattice)
    .map(Check::finish)
    .collect();
    let all_passed = checks.iter().all(CheckOutcome::passed);
    Ok((
        SuiteResult {
            corpus_size: corpus.len(),
            checks,
            all_passed,
        },
        timings,
    ))
}

/// A user-supplied ring added to the corpus.
pub fn extra_ring(name: &str, algebra: FiniteAlgebra) -> CorpusRing {
    CorpusRing {
        name: name.to_string(),
        algebra,
    }
}
