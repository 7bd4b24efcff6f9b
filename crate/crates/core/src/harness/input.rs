//! JSON ring and module descriptions.
//!
//! A ring is either raw structure constants
//! `{ "p": 2, "dim": 2, "labels": ["1","x"], "one": [1,0], "mul": [[0,0,[1,0]], ...] }`
//! or a constructor such as `{ "construct": "matrix", "base": {...}, "n": 2 }`.
//! A module is `{ "ring": <ring or path>, "dim": d, "action": [matrix per basis element] }`
//! or a constructor (`regular`, `direct_sum`, `quotient`, `submodule`, `socle`).

use crate::algebra::{build_algebra, AlgebraSpec, Ring};
use crate::error::{Error, Result};
use crate::guards::Guards;
use crate::linalg::{Matrix, Vector};
use crate::module::{direct_sum_all, regular_module, socle, RightModule};
use serde_json::Value;
use std::path::Path;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ModuleSpec {
    Regular,
    Explicit { dim: usize, action: Vec<Vec<Vec<u64>>> },
    DirectSum(Vec<ModuleSpec>),
    /// M/N with N generated by the given vectors.
    Quotient { of: Box<ModuleSpec>, by: Vec<Vec<u64>> },
    /// The submodule generated by the given vectors, in its own coordinates.
    Submodule { of: Box<ModuleSpec>, generators: Vec<Vec<u64>> },
    Socle(Box<ModuleSpec>),
}

impl ModuleSpec {
    pub fn direct_sum(parts: Vec<ModuleSpec>) -> Self {
        ModuleSpec::DirectSum(parts)
    }

    pub fn quotient(of: ModuleSpec, by: Vec<Vec<u64>>) -> Self {
        ModuleSpec::Quotient { of: Box::new(of), by }
    }

    pub fn submodule(of: ModuleSpec, generators: Vec<Vec<u64>>) -> Self {
        ModuleSpec::Submodule { of: Box::new(of), generators }
    }

    pub fn socle(of: ModuleSpec) -> Self {
        ModuleSpec::Socle(Box::new(of))
    }
}

fn err(path: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("{path}: {msg}"))
}

fn field<'a>(v: &'a Value, key: &str, path: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| err(path, format!("missing field `{key}`")))
}

fn uint(v: &Value, path: &str) -> Result<u64> {
    v.as_u64().ok_or_else(|| err(path, "expected a non-negative integer"))
}

fn uint_field(v: &Value, key: &str, path: &str) -> Result<u64> {
    uint(field(v, key, path)?, &format!("{path}.{key}"))
}

fn array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| err(path, "expected an array"))
}

fn uints(v: &Value, path: &str) -> Result<Vec<u64>> {
    array(v, path)?.iter().enumerate().map(|(i, x)| uint(x, &format!("{path}[{i}]"))).collect()
}

fn vectors(v: &Value, path: &str) -> Result<Vec<Vec<u64>>> {
    array(v, path)?.iter().enumerate().map(|(i, x)| uints(x, &format!("{path}[{i}]"))).collect()
}

/// Parses a ring description; `path` names the location for diagnostics.
pub fn ring_spec_from_json(v: &Value, path: &str) -> Result<AlgebraSpec> {
    let Some(construct) = v.get("construct") else {
        return raw_spec(v, path);
    };
    let name = construct.as_str().ok_or_else(|| err(path, "`construct` must be a string"))?;
    let sub = |key: &str| -> Result<Box<AlgebraSpec>> {
        Ok(Box::new(ring_spec_from_json(field(v, key, path)?, &format!("{path}.{key}"))?))
    };
    Ok(match name {
        "field" => AlgebraSpec::Field { p: uint_field(v, "p", path)? },
        "poly_quotient" => AlgebraSpec::PolyQuotient {
            p: uint_field(v, "p", path)?,
            coeffs: uints(field(v, "coeffs", path)?, &format!("{path}.coeffs"))?,
        },
        "matrix" => AlgebraSpec::Matrix { base: sub("base")?, n: uint_field(v, "n", path)? as usize },
        "upper_triangular" => {
            AlgebraSpec::UpperTriangular { p: uint_field(v, "p", path)?, n: uint_field(v, "n", path)? as usize }
        }
        "product" => AlgebraSpec::Product(sub("left")?, sub("right")?),
        "corner" => {
            AlgebraSpec::Corner { base: sub("base")?, e: uints(field(v, "e", path)?, &format!("{path}.e"))? }
        }
        "raw" => raw_spec(v, path)?,
        other => return Err(err(path, format!("unknown ring constructor `{other}`"))),
    })
}

fn raw_spec(v: &Value, path: &str) -> Result<AlgebraSpec> {
    let p = uint_field(v, "p", path)?;
    let dim = uint_field(v, "dim", path)? as usize;
    let labels: Vec<String> = match v.get("labels") {
        Some(l) => array(l, &format!("{path}.labels"))?
            .iter()
            .map(|s| s.as_str().map(str::to_string).ok_or_else(|| err(&format!("{path}.labels"), "expected strings")))
            .collect::<Result<_>>()?,
        None => (0..dim).map(|i| format!("b{i}")).collect(),
    };
    if labels.len() != dim {
        return Err(err(path, format!("{} labels for dim {dim}", labels.len())));
    }
    let one = uints(field(v, "one", path)?, &format!("{path}.one"))?;
    let mut mul = Vec::new();
    for (t, entry) in array(field(v, "mul", path)?, &format!("{path}.mul"))?.iter().enumerate() {
        let here = format!("{path}.mul[{t}]");
        let parts = array(entry, &here)?;
        if parts.len() != 3 {
            return Err(err(&here, "expected [i, j, [coefficients]]"));
        }
        let i = uint(&parts[0], &here)? as usize;
        let j = uint(&parts[1], &here)? as usize;
        if i >= dim || j >= dim {
            return Err(err(&here, format!("index ({i}, {j}) out of range for dim {dim}")));
        }
        mul.push((i, j, uints(&parts[2], &here)?));
    }
    Ok(AlgebraSpec::Raw { p, labels, one, mul })
}

pub fn module_spec_from_json(v: &Value, path: &str) -> Result<ModuleSpec> {
    let Some(construct) = v.get("construct") else {
        let dim = uint_field(v, "dim", path)? as usize;
        let action = array(field(v, "action", path)?, &format!("{path}.action"))?
            .iter()
            .enumerate()
            .map(|(i, m)| vectors(m, &format!("{path}.action[{i}]")))
            .collect::<Result<_>>()?;
        return Ok(ModuleSpec::Explicit { dim, action });
    };
    let name = construct.as_str().ok_or_else(|| err(path, "`construct` must be a string"))?;
    let inner = |key: &str| -> Result<Box<ModuleSpec>> {
        Ok(Box::new(module_spec_from_json(field(v, key, path)?, &format!("{path}.{key}"))?))
    };
    Ok(match name {
        "regular" => ModuleSpec::Regular,
        "direct_sum" => ModuleSpec::DirectSum(
            array(field(v, "parts", path)?, &format!("{path}.parts"))?
                .iter()
                .enumerate()
                .map(|(i, m)| module_spec_from_json(m, &format!("{path}.parts[{i}]")))
                .collect::<Result<_>>()?,
        ),
        "quotient" => ModuleSpec::Quotient { of: inner("of")?, by: vectors(field(v, "by", path)?, &format!("{path}.by"))? },
        "submodule" => ModuleSpec::Submodule {
            of: inner("of")?,
            generators: vectors(field(v, "generators", path)?, &format!("{path}.generators"))?,
        },
        "socle" => ModuleSpec::Socle(inner("of")?),
        other => return Err(err(path, format!("unknown module constructor `{other}`"))),
    })
}

fn reduce(ring: &Ring, v: &[u64], expected: usize, path: &str) -> Result<Vector> {
    if v.len() != expected {
        return Err(err(path, format!("vector has length {}, expected {expected}", v.len())));
    }
    let p = ring.p() as u64;
    Ok(v.iter().map(|&x| (x % p) as u32).collect())
}

pub fn build_module(ring: &Ring, spec: &ModuleSpec, guards: &Guards) -> Result<RightModule> {
    build_at(ring, spec, guards, "$")
}

fn build_at(ring: &Ring, spec: &ModuleSpec, guards: &Guards, path: &str) -> Result<RightModule> {
    match spec {
        ModuleSpec::Regular => Ok(regular_module(ring)),
        ModuleSpec::Explicit { dim, action } => {
            if action.len() != ring.dim() {
                return Err(err(path, format!("{} action matrices for a ring of dim {}", action.len(), ring.dim())));
            }
            let mats = action
                .iter()
                .enumerate()
                .map(|(i, rows)| {
                    let here = format!("{path}.action[{i}]");
                    if rows.len() != *dim {
                        return Err(err(&here, format!("{} rows, expected {dim}", rows.len())));
                    }
                    let rows: Vec<Vector> = rows.iter().map(|r| reduce(ring, r, *dim, &here)).collect::<Result<_>>()?;
                    Ok(Matrix::from_rows(ring.field(), *dim, &rows))
                })
                .collect::<Result<Vec<_>>>()?;
            RightModule::new(ring, mats).map_err(|e| err(path, e))
        }
        ModuleSpec::DirectSum(parts) => {
            let built = parts
                .iter()
                .enumerate()
                .map(|(i, s)| build_at(ring, s, guards, &format!("{path}.parts[{i}]")))
                .collect::<Result<Vec<_>>>()?;
            direct_sum_all(ring, &built)
        }
        ModuleSpec::Quotient { of, by } => {
            let m = build_at(ring, of, guards, &format!("{path}.of"))?;
            let gens = by.iter().map(|v| reduce(ring, v, m.dim(), &format!("{path}.by"))).collect::<Result<Vec<_>>>()?;
            Ok(m.quotient(&m.span(gens)).0)
        }
        ModuleSpec::Submodule { of, generators } => {
            let m = build_at(ring, of, guards, &format!("{path}.of"))?;
            let gens = generators
                .iter()
                .map(|v| reduce(ring, v, m.dim(), &format!("{path}.generators")))
                .collect::<Result<Vec<_>>>()?;
            Ok(m.submodule_module(&m.span(gens)))
        }
        ModuleSpec::Socle(of) => {
            let m = build_at(ring, of, guards, &format!("{path}.of"))?;
            let s = socle(&m, guards)?;
            Ok(m.submodule_module(&s))
        }
    }
}

pub fn parse_ring(text: &str) -> Result<Ring> {
    let v: Value = serde_json::from_str(text)?;
    build_algebra(&ring_spec_from_json(&v, "$")?)
}

/// A module file; `"ring"` may be inline or a path relative to `base`.
pub fn parse_module(text: &str, base: Option<&Path>, guards: &Guards) -> Result<(Ring, RightModule)> {
    let v: Value = serde_json::from_str(text)?;
    let ring_v = field(&v, "ring", "$")?;
    let ring = match ring_v.as_str() {
        Some(rel) => {
            let p = base.map_or_else(|| Path::new(rel).to_path_buf(), |b| b.join(rel));
            parse_ring(&std::fs::read_to_string(&p).map_err(|e| err("$.ring", format!("{}: {e}", p.display())))?)?
        }
        None => build_algebra(&ring_spec_from_json(ring_v, "$.ring")?)?,
    };
    let spec = module_spec_from_json(&v, "$")?;
    let m = build_module(&ring, &spec, guards)?;
    Ok((ring, m))
}

pub fn read_module_file(path: &Path, guards: &Guards) -> Result<(Ring, RightModule)> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_module(&text, path.parent(), guards)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_file() {
        let r = parse_ring(r#"{ "construct": "field", "p": 2 }"#).unwrap();
        assert_eq!(r.dim(), 1);
        assert_eq!(r.p(), 2);
    }

    #[test]
    fn raw_ring_and_bad_triple() {
        let dual = r#"{ "p": 2, "dim": 2, "labels": ["1","x"], "one": [1,0],
            "mul": [[0,0,[1,0]], [0,1,[0,1]], [1,0,[0,1]]] }"#;
        let r = parse_ring(dual).unwrap();
        assert_eq!(r.mul(&[0, 1], &[0, 1]), vec![0, 0]);
        let bad = r#"{ "p": 2, "dim": 2, "one": [1,0], "mul": [[0,5,[1,0]]] }"#;
        let e = parse_ring(bad).unwrap_err().to_string();
        assert!(e.contains("(0, 5)") && e.contains("$.mul[0]"), "{e}");
        // (b1·b2)·b2 = b1 but b1·(b2·b2) = 0.
        let nonassoc = r#"{ "p": 2, "dim": 3, "one": [1,0,0],
            "mul": [[0,0,[1,0,0]], [0,1,[0,1,0]], [0,2,[0,0,1]], [1,0,[0,1,0]], [2,0,[0,0,1]], [1,2,[0,1,0]]] }"#;
        let e = parse_ring(nonassoc).unwrap_err();
        assert!(matches!(e, Error::NonAssociative { .. }), "{e}");
    }

    #[test]
    fn non_idempotent_corner() {
        let spec = r#"{ "construct": "corner", "e": [0,1,0,0],
            "base": { "construct": "matrix", "n": 2, "base": { "construct": "field", "p": 2 } } }"#;
        assert_eq!(parse_ring(spec).unwrap_err().to_string(), "e² ≠ e");
    }

    #[test]
    fn module_constructors() {
        let g = Guards::default();
        let text = r#"{ "ring": { "construct": "poly_quotient", "p": 2, "coeffs": [0,0,1] },
            "construct": "direct_sum",
            "parts": [ { "construct": "regular" },
                       { "construct": "quotient", "of": { "construct": "regular" }, "by": [[0,1]] } ] }"#;
        let (_, m) = parse_module(text, None, &g).unwrap();
        assert_eq!(m.dim(), 3);
        let soc = r#"{ "ring": { "construct": "poly_quotient", "p": 2, "coeffs": [0,0,1] },
            "construct": "socle", "of": { "construct": "regular" } }"#;
        assert_eq!(parse_module(soc, None, &g).unwrap().1.dim(), 1);
        let explicit = r#"{ "ring": { "construct": "field", "p": 3 }, "dim": 2, "action": [[[1,0],[0,1]]] }"#;
        assert_eq!(parse_module(explicit, None, &g).unwrap().1.dim(), 2);
        let broken = r#"{ "ring": { "construct": "field", "p": 3 }, "dim": 2, "action": [[[1,0]]] }"#;
        let e = parse_module(broken, None, &g).unwrap_err().to_string();
        assert!(e.contains("$.action[0]"), "{e}");
    }
}
