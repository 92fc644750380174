//! JSON ring specifications and the rings they build.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::finalg::{
    algebra_from_zero_dim_quotient, chain_ring, ideal_closure, idealization, local_decompose,
    truncated_polynomial_ring, FiniteAlgebra, FiniteModule, StructureConstants,
};
use crate::polyalg::{
    parse_element, parse_poly, split_list, MonomialOrder, PolyQuotient, PolyRing, Polynomial,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OrderSpec {
    Lex,
    #[default]
    Grevlex,
}

impl From<OrderSpec> for MonomialOrder {
    fn from(o: OrderSpec) -> Self {
        match o {
            OrderSpec::Lex => MonomialOrder::Lex,
            OrderSpec::Grevlex => MonomialOrder::Grevlex,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RingSpec {
    StructureConstants(StructureConstantsSpec),
    PolyQuotient(PolyQuotientSpec),
    Poly(PolySpec),
    Family(FamilySpec),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureConstantsSpec {
    pub p: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<String>>,
    pub mul_table: Vec<Vec<Vec<i64>>>,
    pub unit: Vec<i64>,
}

/// A quotient expected to be finite-dimensional.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolyQuotientSpec {
    pub p: u64,
    pub variables: Vec<String>,
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolySpec {
    pub p: u64,
    pub variables: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<OrderSpec>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpec {
    pub name: FamilyName,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub deg: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<Box<RingSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub module: Option<ModuleSpec>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyName {
    /// `F_p[x_1..x_n]/(x_1..x_n)^deg`
    Trunc,
    /// `F_p[x]/(x^k)`
    Chain,
    /// `F_p^m`
    FieldProduct,
    /// `A (+) M`
    Idealization,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum ModuleSpec {
    Regular,
    Zero,
    /// `A / (ideal)`, the generators written in the base ring's symbols.
    Quotient {
        ideal: Vec<String>,
    },
    /// `A / m` for local `A`.
    Residue,
}

/// A ring built from a spec, together with the names usable in element
/// expressions.
#[derive(Debug, Clone)]
pub enum BuiltRing {
    Finite {
        algebra: FiniteAlgebra,
        symbols: Vec<(String, Vec<u32>)>,
        description: String,
    },
    Poly {
        quotient: PolyQuotient,
        description: String,
    },
}

impl BuiltRing {
    pub fn description(&self) -> &str {
        match self {
            BuiltRing::Finite { description, .. } | BuiltRing::Poly { description, .. } => {
                description
            }
        }
    }

    pub fn backend(&self) -> &'static str {
        match self {
            BuiltRing::Finite { .. } => "finite",
            BuiltRing::Poly { .. } => "poly",
        }
    }

    pub fn finite(&self) -> Result<(&FiniteAlgebra, &[(String, Vec<u32>)])> {
        match self {
            BuiltRing::Finite {
                algebra, symbols, ..
            } => Ok((algebra, symbols)),
            BuiltRing::Poly { .. } => Err(Error::BackendMismatch(
                "this command needs a finite ring".into(),
            )),
        }
    }
}

fn join_path(prefix: &str, path: &str) -> String {
    match (prefix.is_empty(), path == "." || path.is_empty()) {
        (true, _) => path.to_string(),
        (false, true) => prefix.to_string(),
        (false, false) => format!("{prefix}.{path}"),
    }
}

fn schema(path: &str, message: impl Into<String>) -> Error {
    Error::Schema {
        path: if path.is_empty() {
            ".".into()
        } else {
            path.to_string()
        },
        message: message.into(),
    }
}

fn typed<T: serde::de::DeserializeOwned>(v: Value, prefix: &str) -> Result<T> {
    serde_path_to_error::deserialize(v).map_err(|e| {
        schema(
            &join_path(prefix, &e.path().to_string()),
            e.inner().to_string(),
        )
    })
}

fn spec_from_value(mut v: Value, prefix: &str) -> Result<RingSpec> {
    let obj = v
        .as_object_mut()
        .ok_or_else(|| schema(prefix, "expected a JSON object"))?;
    let kind = match obj.remove("kind") {
        Some(Value::String(k)) => k,
        Some(_) => return Err(schema(&join_path(prefix, "kind"), "expected a string")),
        None => return Err(schema(prefix, "missing field `kind`")),
    };
    match kind.as_str() {
        "structure_constants" => Ok(RingSpec::StructureConstants(typed(v, prefix)?)),
        "poly_quotient" => Ok(RingSpec::PolyQuotient(typed(v, prefix)?)),
        "poly" => Ok(RingSpec::Poly(typed(v, prefix)?)),
        "family" => {
            let base = obj.remove("base");
            let mut f: FamilySpec = typed(v, prefix)?;
            if let Some(b) = base {
                f.base = Some(Box::new(spec_from_value(b, &join_path(prefix, "base"))?));
            }
            Ok(RingSpec::Family(f))
        }
        other => Err(schema(
            &join_path(prefix, "kind"),
            format!(
                "unknown kind `{other}`, expected one of structure_constants, poly_quotient, poly, family"
            ),
        )),
    }
}

/// Parse JSON text into a spec, reporting the JSON path of schema errors.
pub fn parse_ring_spec(text: &str) -> Result<RingSpec> {
    let value: Value = serde_json::from_str(text).map_err(|e| schema("", e.to_string()))?;
    spec_from_value(value, "")
}

fn missing(field: &str) -> Error {
    Error::Schema {
        path: field.to_string(),
        message: format!("missing field `{field}` for this family"),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

fn basis_symbols(a: &FiniteAlgebra) -> Vec<(String, Vec<u32>)> {
    a.basis_names()
        .iter()
        .enumerate()
        .filter(|(_, n)| is_identifier(n))
        .map(|(i, n)| (n.clone(), a.basis_element(i)))
        .collect()
}

fn parse_relations(ring: &std::sync::Arc<PolyRing>, rels: &[String]) -> Result<Vec<Polynomial>> {
    rels.iter().map(|r| parse_poly(ring, r)).collect()
}

pub fn build_ring(spec: &RingSpec) -> Result<BuiltRing> {
    match spec {
        RingSpec::StructureConstants(StructureConstantsSpec {
            p,
            basis,
            mul_table,
            unit,
        }) => {
            let basis = basis
                .clone()
                .unwrap_or_else(|| (0..unit.len()).map(|i| format!("e{i}")).collect());
            let algebra = FiniteAlgebra::from_structure_constants(&StructureConstants {
                p: *p,
                basis,
                mul_table: mul_table.clone(),
                unit: unit.clone(),
            })?;
            let description = format!("structure constants over F_{p}, dim {}", algebra.dim());
            Ok(BuiltRing::Finite {
                symbols: basis_symbols(&algebra),
                algebra,
                description,
            })
        }
        RingSpec::PolyQuotient(PolyQuotientSpec {
            p,
            variables,
            relations,
            order,
        }) => {
            let ring = PolyRing::new(
                *p,
                variables.iter().cloned(),
                order.unwrap_or_default().into(),
            )?;
            let q = algebra_from_zero_dim_quotient(&ring, &parse_relations(&ring, relations)?)?;
            let description = format!("F_{p}[{}]/({})", variables.join(","), relations.join(", "));
            Ok(BuiltRing::Finite {
                symbols: q.symbols(),
                algebra: q.algebra,
                description,
            })
        }
        RingSpec::Poly(PolySpec {
            p,
            variables,
            relations,
            order,
        }) => {
            let ring = PolyRing::new(
                *p,
                variables.iter().cloned(),
                order.unwrap_or_default().into(),
            )?;
            let quotient = PolyQuotient::new(&ring, parse_relations(&ring, relations)?)?;
            let mut description = format!("F_{p}[{}]", variables.join(","));
            if !relations.is_empty() {
                description.push_str(&format!("/({})", relations.join(", ")));
            }
            Ok(BuiltRing::Poly {
                quotient,
                description,
            })
        }
        RingSpec::Family(f) => build_family(f),
    }
}

fn build_family(f: &FamilySpec) -> Result<BuiltRing> {
    let (p, n, deg, k, m) = (f.p, f.n, f.deg, f.k, f.m);
    match f.name {
        FamilyName::Trunc => {
            let (p, n, deg) = (
                p.ok_or_else(|| missing("p"))?,
                n.ok_or_else(|| missing("n"))?,
                deg.ok_or_else(|| missing("deg"))?,
            );
            let q = truncated_polynomial_ring(p, n, deg)?;
            let vars: Vec<&str> = q.ring.vars().iter().map(String::as_str).collect();
            Ok(BuiltRing::Finite {
                symbols: q.symbols(),
                algebra: q.algebra,
                description: format!("F_{p}[{}]/({})^{deg}", vars.join(","), vars.join(",")),
            })
        }
        FamilyName::Chain => {
            let (p, k) = (
                p.ok_or_else(|| missing("p"))?,
                k.ok_or_else(|| missing("k"))?,
            );
            let q = chain_ring(p, k)?;
            Ok(BuiltRing::Finite {
                symbols: q.symbols(),
                algebra: q.algebra,
                description: if k == 1 {
                    format!("F_{p}")
                } else {
                    format!("F_{p}[x]/(x^{k})")
                },
            })
        }
        FamilyName::FieldProduct => {
            let (p, m) = (
                p.ok_or_else(|| missing("p"))?,
                m.ok_or_else(|| missing("m"))?,
            );
            let algebra = FiniteAlgebra::field_product(p, m)?;
            Ok(BuiltRing::Finite {
                symbols: basis_symbols(&algebra),
                algebra,
                description: vec![format!("F_{p}"); m].join(" x "),
            })
        }
        FamilyName::Idealization => {
            let base = build_ring(f.base.as_deref().ok_or_else(|| missing("base"))?)?;
            let (a, base_symbols) = base.finite()?;
            let module_spec = f.module.as_ref().ok_or_else(|| missing("module"))?;
            let (label, mm) = match module_spec {
                ModuleSpec::Regular => ("R".to_string(), FiniteModule::regular(a)),
                ModuleSpec::Zero => ("0".to_string(), FiniteModule::zero(a)),
                ModuleSpec::Residue => {
                    let factors = local_decompose(a)?;
                    if factors.len() != 1 {
                        return Err(Error::Schema {
                            path: "module".into(),
                            message: "the residue module needs a local base ring".into(),
                        });
                    }
                    (
                        "k".to_string(),
                        FiniteModule::cyclic(a, &factors[0].maximal_ideal),
                    )
                }
                ModuleSpec::Quotient { ideal } => {
                    let gens = ideal
                        .iter()
                        .map(|g| parse_element(a, base_symbols, g))
                        .collect::<Result<Vec<_>>>()?;
                    (
                        format!("R/({})", ideal.join(", ")),
                        FiniteModule::cyclic(a, &ideal_closure(a, &gens)),
                    )
                }
            };
            let algebra = idealization(a, &mm)?;
            let da = a.dim();
            let mut symbols: Vec<(String, Vec<u32>)> = base_symbols
                .iter()
                .map(|(n, v)| {
                    let mut w = v.clone();
                    w.resize(algebra.dim(), 0);
                    (n.clone(), w)
                })
                .collect();
            for i in da..algebra.dim() {
                symbols.push((algebra.basis_names()[i].clone(), algebra.basis_element(i)));
            }
            Ok(BuiltRing::Finite {
                algebra,
                symbols,
                description: format!("({}) (+) {label}", base.description()),
            })
        }
    }
}

/// Parse a comma-separated list of ring elements.
pub fn parse_finite_elements(
    a: &FiniteAlgebra,
    symbols: &[(String, Vec<u32>)],
    text: &str,
) -> Result<Vec<Vec<u32>>> {
    split_list(text)
        .into_iter()
        .filter(|s| !s.is_empty())
        .map(|s| parse_element(a, symbols, s))
        .collect()
}

pub fn parse_poly_elements(q: &PolyQuotient, text: &str) -> Result<Vec<Polynomial>> {
    split_list(text)
        .into_iter()
        .filter(|s| !s.is_empty())
        .map(|s| parse_poly(q.ring(), s).map(|f| q.reduce(&f)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let s = parse_ring_spec(
            r#"{"kind":"poly_quotient","p":2,"variables":["x","y"],"relations":["x^2","x*y","y^2"]}"#,
        )
        .unwrap();
        let b = build_ring(&s).unwrap();
        assert_eq!(b.finite().unwrap().0.dim(), 3);

        let s = parse_ring_spec(r#"{"kind":"family","name":"chain","p":3,"k":3}"#).unwrap();
        let b = build_ring(&s).unwrap();
        assert_eq!(b.description(), "F_3[x]/(x^3)");
        assert_eq!(b.finite().unwrap().0.dim(), 3);

        let s = parse_ring_spec(r#"{"kind":"poly","p":2,"variables":["x","y"]}"#).unwrap();
        assert_eq!(build_ring(&s).unwrap().backend(), "poly");
    }

    #[test]
    fn schema_errors_carry_paths() {
        let e = parse_ring_spec(r#"{"kind":"chain"}"#).unwrap_err();
        assert!(matches!(e, Error::Schema { .. }));
        let e = parse_ring_spec(r#"{"kind":"poly","p":"two","variables":[]}"#).unwrap_err();
        let Error::Schema { path, .. } = e else {
            panic!()
        };
        assert!(path.contains('p'), "{path}");
        let e = parse_ring_spec(
            r#"{"kind":"family","name":"idealization","base":{"kind":"family","name":"chain","p":2,"k":"x"}}"#,
        )
        .unwrap_err();
        let Error::Schema { path, .. } = e else {
            panic!()
        };
        assert_eq!(path, "base.k");
        let s = parse_ring_spec(r#"{"kind":"family","name":"chain","p":3}"#).unwrap();
        assert!(matches!(build_ring(&s), Err(Error::Schema { .. })));
    }

    #[test]
    fn idealization_family() {
        let s = parse_ring_spec(
            r#"{"kind":"family","name":"idealization",
                "base":{"kind":"family","name":"chain","p":2,"k":1},
                "module":{"type":"regular"}}"#,
        )
        .unwrap();
        let echo: RingSpec = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(echo, s);
        let b = build_ring(&s).unwrap();
        let (a, syms) = b.finite().unwrap();
        assert_eq!(a.dim(), 2);
        let t = parse_finite_elements(a, syms, "t, t*t").unwrap();
        assert_eq!(t, vec![vec![0, 1], vec![0, 0]]);
    }

    #[test]
    fn structure_constant_errors_propagate() {
        let s = parse_ring_spec(
            r#"{"kind":"structure_constants","p":2,"mul_table":[[[1,0],[0,1]],[[1,1],[0,1]]],"unit":[1,0]}"#,
        )
        .unwrap();
        assert_eq!(build_ring(&s).unwrap_err(), Error::NotCommutative(0, 1));
    }
}
