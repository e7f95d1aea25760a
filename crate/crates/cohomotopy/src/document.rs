//! JSON manifold descriptions.

use std::str::FromStr;

use cohomotopy_core::abelian::{FinAbGroup, GroupElement};
use cohomotopy_core::classify::{parity, Parity};
use cohomotopy_core::extension::Z2Functional;
use cohomotopy_core::manifold::{ManifoldData, Violation};
use cohomotopy_core::{Int, IntMatrix};
use serde::{Deserialize, Serialize};
use serde_json::Number;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocError {
    /// Malformed document.
    Parse(String),
    /// Well-formed, but the data violates the manifold constraints.
    Invalid(Vec<String>),
}

impl std::fmt::Display for DocError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DocError::Parse(m) => write!(f, "parse error: {m}"),
            DocError::Invalid(v) => {
                write!(f, "invalid manifold data:")?;
                for m in v {
                    write!(f, "\n  - {m}")?;
                }
                Ok(())
            }
        }
    }
}

impl std::error::Error for DocError {}

pub fn int_to_number(x: &Int) -> Number {
    Number::from_str(&x.to_string()).expect("integers are JSON numbers")
}

pub fn number_to_int(n: &Number) -> Result<Int, DocError> {
    let s = n.to_string();
    Int::from_str(&s).map_err(|_| DocError::Parse(format!("expected an integer, found {s}")))
}

fn ints(v: &[Number]) -> Result<Vec<Int>, DocError> {
    v.iter().map(number_to_int).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupDoc {
    pub free_rank: usize,
    #[serde(default)]
    pub torsion: Vec<Number>,
}

impl GroupDoc {
    pub fn from_group(g: &FinAbGroup) -> Self {
        GroupDoc {
            free_rank: g.free_rank(),
            torsion: g.torsion().iter().map(int_to_number).collect(),
        }
    }

    pub fn to_group(&self) -> Result<FinAbGroup, DocError> {
        FinAbGroup::new(ints(&self.torsion)?, self.free_rank)
            .map_err(|e| DocError::Parse(format!("torsion {:?}: {e}", self.torsion_strings())))
    }

    fn torsion_strings(&self) -> Vec<String> {
        self.torsion.iter().map(Number::to_string).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementDoc {
    #[serde(default)]
    pub torsion: Vec<Number>,
    #[serde(default)]
    pub free: Vec<Number>,
}

impl ElementDoc {
    pub fn from_element(g: &FinAbGroup, x: &GroupElement) -> Self {
        ElementDoc {
            torsion: x.torsion_coords(g).iter().map(int_to_number).collect(),
            free: x.free_coords(g).iter().map(int_to_number).collect(),
        }
    }

    fn to_element(&self, g: &FinAbGroup) -> Result<Option<GroupElement>, DocError> {
        if self.torsion.len() != g.torsion_len() || self.free.len() != g.free_rank() {
            return Ok(None);
        }
        let coords = ints(&self.torsion)?.into_iter().chain(ints(&self.free)?).collect();
        Ok(g.element(coords).ok())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MuEntry {
    pub h2_gen: usize,
    pub h3_gen: usize,
    pub value: ElementDoc,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldDocument {
    pub h1: GroupDoc,
    pub h2: GroupDoc,
    pub h3_rank: usize,
    #[serde(default)]
    pub q: Vec<Vec<Number>>,
    #[serde(default)]
    pub mu: Vec<MuEntry>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<Vec<u8>>,
}

/// Parsed data plus duality violations that `permissive` let through.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub data: ManifoldData,
    pub warnings: Vec<Violation>,
}

impl ManifoldDocument {
    pub fn from_json(text: &str) -> Result<Self, DocError> {
        serde_json::from_str(text).map_err(|e| DocError::Parse(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents serialize")
    }

    /// Mirrors `x`, listing only nonzero pairing values and always including `w`.
    pub fn from_manifold(x: &ManifoldData) -> Self {
        let mut mu = Vec::new();
        for (i, row) in x.mu.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    mu.push(MuEntry {
                        h2_gen: i,
                        h3_gen: j,
                        value: ElementDoc::from_element(&x.h1, v),
                    });
                }
            }
        }
        ManifoldDocument {
            h1: GroupDoc::from_group(&x.h1),
            h2: GroupDoc::from_group(&x.h2),
            h3_rank: x.h3_rank,
            q: x.q
                .to_rows()
                .iter()
                .map(|r| r.iter().map(int_to_number).collect())
                .collect(),
            mu,
            w: Some(x.w.bits().iter().map(|&b| u8::from(b)).collect()),
        }
    }

    /// Builds and validates. With `permissive`, duality violations become warnings.
    pub fn to_manifold(&self, permissive: bool) -> Result<Loaded, DocError> {
        let h1 = self.h1.to_group()?;
        let h2 = self.h2.to_group()?;
        let n = self.q.len();
        let mut problems = Vec::new();
        if let Some(r) = self.q.iter().find(|r| r.len() != n) {
            return Err(DocError::Parse(format!(
                "q must be square: {n} rows but a row of length {}",
                r.len()
            )));
        }
        let q_rows: Vec<Vec<Int>> = self.q.iter().map(|r| ints(r)).collect::<Result<_, _>>()?;
        let q = IntMatrix::from_fn(n, n, |i, j| q_rows[i][j].clone());

        let mut data = ManifoldData::with_zero_pairings(h1.clone(), h2.clone(), self.h3_rank, q);
        for e in &self.mu {
            if e.h2_gen >= h2.num_generators() || e.h3_gen >= self.h3_rank {
                problems.push(format!(
                    "mu entry ({}, {}) out of range: h2 has {} generators, h3 rank {}",
                    e.h2_gen,
                    e.h3_gen,
                    h2.num_generators(),
                    self.h3_rank
                ));
                continue;
            }
            match e.value.to_element(&h1)? {
                Some(v) => data.mu[e.h2_gen][e.h3_gen] = v,
                None => problems.push(format!(
                    "mu entry ({}, {}) is not an element of H_1 = {h1}",
                    e.h2_gen, e.h3_gen
                )),
            }
        }

        let even = parity(&data) == Parity::Even;
        let n_bits = h1.even_factor_indices().len();
        match &self.w {
            Some(bits) => {
                if let Some(b) = bits.iter().find(|&&b| b > 1) {
                    return Err(DocError::Parse(format!("w bits must be 0 or 1, found {b}")));
                }
                match Z2Functional::new(h1.clone(), bits.iter().map(|&b| b == 1).collect()) {
                    Ok(w) => data.w = w,
                    Err(e) => problems.push(format!("w: {e}")),
                }
            }
            None if even && n_bits > 0 => {
                problems.push("w is required when the intersection form is even".to_string())
            }
            None => {}
        }

        let mut warnings = Vec::new();
        for v in data.validate() {
            if permissive && v.is_duality() {
                warnings.push(v);
            } else {
                problems.push(v.to_string());
            }
        }
        if problems.is_empty() {
            Ok(Loaded { data, warnings })
        } else {
            Err(DocError::Invalid(problems))
        }
    }
}
