use alloc::vec::Vec;

use super::group::{FinAbGroup, GroupElement};
use super::hom::GroupHom;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};
use crate::int::Int;
use crate::matrix::IntMatrix;

/// `Z^n / <rows of relations>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentedGroup {
    num_generators: usize,
    relations: IntMatrix,
}

impl PresentedGroup {
    pub fn new(num_generators: usize, relations: IntMatrix) -> Result<Self> {
        if relations.cols() != num_generators && relations.rows() > 0 {
            return Err(Error::DimensionMismatch {
                expected: num_generators,
                found: relations.cols(),
            });
        }
        let relations = if relations.rows() == 0 {
            IntMatrix::zeros(0, num_generators)
        } else {
            relations
        };
        Ok(PresentedGroup {
            num_generators,
            relations,
        })
    }

    /// Builds from relation rows; each row must have `num_generators` entries.
    pub fn from_relations(num_generators: usize, rows: Vec<Vec<Int>>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != num_generators) {
            return Err(Error::DimensionMismatch {
                expected: num_generators,
                found: bad.len(),
            });
        }
        let n = rows.len();
        let m = IntMatrix::from_fn(n, num_generators, |i, j| rows[i][j].clone());
        Self::new(num_generators, m)
    }

    /// The presentation `generators of g | d_i g_i = 0`.
    pub fn of_group(g: &FinAbGroup) -> Self {
        let n = g.num_generators();
        let rel = IntMatrix::from_fn(g.torsion_len(), n, |i, j| {
            if i == j {
                g.torsion()[i].clone()
            } else {
                Int::ZERO
            }
        });
        PresentedGroup {
            num_generators: n,
            relations: rel,
        }
    }

    pub fn num_generators(&self) -> usize {
        self.num_generators
    }

    pub fn relations(&self) -> &IntMatrix {
        &self.relations
    }

    /// Appends relation rows.
    pub fn with_relations(&self, rows: impl IntoIterator<Item = Vec<Int>>) -> Self {
        let mut all = self.relations.to_rows();
        for r in rows {
            assert_eq!(r.len(), self.num_generators, "relation length mismatch");
            all.push(r);
        }
        let n = all.len();
        PresentedGroup {
            num_generators: self.num_generators,
            relations: IntMatrix::from_fn(n, self.num_generators, |i, j| all[i][j].clone()),
        }
    }

    pub fn normalize(&self) -> Normalized {
        normalize_presentation(self)
    }
}

/// Result of normalizing a presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub group: FinAbGroup,
    /// Image of each abstract generator.
    pub coordinates: Vec<GroupElement>,
    /// For each generator of `group`, an integer combination of the abstract
    /// generators mapping to it.
    pub lifts: Vec<Vec<Int>>,
}

impl Normalized {
    /// Image of an integer combination of abstract generators.
    pub fn map(&self, combination: &[Int]) -> GroupElement {
        self.group
            .combine(combination.iter().zip(&self.coordinates))
    }

    /// The coordinate map as a homomorphism out of `source`, whose generators
    /// are identified with the abstract ones.
    pub fn as_hom(&self, source: FinAbGroup) -> Result<GroupHom> {
        GroupHom::new(source, self.group.clone(), self.coordinates.clone())
    }
}

/// Reduces `Z^n / <relations>` to invariant-factor form.
///
/// With `U R V = D`, an element with coordinate row vector `x` has normalized
/// coordinates `x V`; generators whose diagonal entry is 1 are dropped.
pub fn normalize_presentation(p: &PresentedGroup) -> Normalized {
    let n = p.num_generators;
    let snf = smith_normal_form(&p.relations);
    let diag = |j: usize| -> Int {
        if j < snf.rank {
            snf.d[(j, j)].clone()
        } else {
            Int::ZERO
        }
    };
    let kept: Vec<usize> = (0..n).filter(|&j| !diag(j).is_one()).collect();
    let torsion: Vec<Int> = kept.iter().map(|&j| diag(j)).filter(|d| !d.is_zero()).collect();
    let free_rank = kept.len() - torsion.len();
    let group = FinAbGroup::new(torsion, free_rank).expect("SNF diagonal is a divisibility chain");
    let coordinates = (0..n)
        .map(|i| {
            group
                .element(kept.iter().map(|&j| snf.v[(i, j)].clone()).collect())
                .expect("coordinate length matches")
        })
        .collect();
    let lifts = kept.iter().map(|&j| snf.v_inv.row(j).to_vec()).collect();
    Normalized {
        group,
        coordinates,
        lifts,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn rows(r: &[&[i64]]) -> Vec<Vec<Int>> {
        r.iter().map(|x| x.iter().map(|&v| Int::from(v)).collect()).collect()
    }

    fn relations_vanish(p: &PresentedGroup, n: &Normalized) {
        for r in p.relations().to_rows() {
            assert!(n.map(&r).is_zero(), "relation {r:?} survives");
        }
        for (j, lift) in n.lifts.iter().enumerate() {
            assert_eq!(n.map(lift), n.group.generator(j));
        }
    }

    #[test]
    fn direct_read_off() {
        let p = PresentedGroup::from_relations(2, rows(&[&[2, 0]])).unwrap();
        let n = p.normalize();
        assert_eq!(n.group, FinAbGroup::from_parts(&[2], 1));
        relations_vanish(&p, &n);
    }

    #[test]
    fn full_relation_is_trivial() {
        let p = PresentedGroup::from_relations(1, rows(&[&[1]])).unwrap();
        let n = p.normalize();
        assert!(n.group.is_trivial());
        relations_vanish(&p, &n);
    }

    #[test]
    fn no_relations_is_free() {
        let p = PresentedGroup::from_relations(3, vec![]).unwrap();
        assert_eq!(p.normalize().group, FinAbGroup::free(3));
    }

    #[test]
    fn doubled_torus_matrix() {
        // rows of 2A for the four-torus A-matrix with b = (0,0,3), c = 0
        let d = 3;
        let a = [[0, d, 0, 0], [-d, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]];
        let r: Vec<Vec<Int>> = a
            .iter()
            .map(|row| row.iter().map(|&v| Int::from(2 * v)).collect())
            .collect();
        let p = PresentedGroup::from_relations(4, r).unwrap();
        let n = p.normalize();
        assert_eq!(n.group, FinAbGroup::from_parts(&[6, 6], 2));
        relations_vanish(&p, &n);
    }

    #[test]
    fn mixed_relations() {
        let p = PresentedGroup::from_relations(3, rows(&[&[2, 0, -1], &[0, 4, -1], &[0, 0, 2]])).unwrap();
        let n = p.normalize();
        assert_eq!(n.group, FinAbGroup::from_parts(&[2, 8], 0));
        relations_vanish(&p, &n);
    }
}
