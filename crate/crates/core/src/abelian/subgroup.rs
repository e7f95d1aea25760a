use alloc::vec::Vec;

use super::group::{FinAbGroup, GroupElement};
use super::presentation::PresentedGroup;
use super::snf::{integer_kernel, solve};
use crate::error::{Error, Result};
use crate::int::Int;
use crate::matrix::IntMatrix;

/// The subgroup of `ambient` generated by a list of elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    ambient: FinAbGroup,
    generators: Vec<GroupElement>,
}

impl Subgroup {
    pub fn new(ambient: FinAbGroup, generators: Vec<GroupElement>) -> Result<Self> {
        if let Some(bad) = generators.iter().find(|g| !ambient.contains(g)) {
            return Err(Error::NotAnElement(alloc::format!("{bad:?} in {ambient}")));
        }
        Ok(Subgroup {
            ambient,
            generators,
        })
    }

    pub fn trivial(ambient: FinAbGroup) -> Self {
        Subgroup {
            ambient,
            generators: Vec::new(),
        }
    }

    pub fn whole(ambient: FinAbGroup) -> Self {
        let generators = (0..ambient.num_generators()).map(|i| ambient.generator(i)).collect();
        Subgroup {
            ambient,
            generators,
        }
    }

    pub fn ambient(&self) -> &FinAbGroup {
        &self.ambient
    }

    pub fn generators(&self) -> &[GroupElement] {
        &self.generators
    }

    pub fn is_trivial(&self) -> bool {
        self.generators.iter().all(GroupElement::is_zero)
    }

    /// Columns: the generators, then `d_i e_i` for each torsion factor.
    fn span_matrix(&self, extra: &[GroupElement], negate_extra: bool) -> IntMatrix {
        let n = self.ambient.num_generators();
        let t = self.ambient.torsion_len();
        let s = self.generators.len();
        let e = extra.len();
        IntMatrix::from_fn(n, s + e + t, |i, j| {
            if j < s {
                self.generators[j].coords()[i].clone()
            } else if j < s + e {
                let v = extra[j - s].coords()[i].clone();
                if negate_extra {
                    -v
                } else {
                    v
                }
            } else if i == j - s - e {
                self.ambient.torsion()[i].clone()
            } else {
                Int::ZERO
            }
        })
    }

    /// Coefficients `c` with `sum c_j g_j = x`, or `None` if `x` is not in
    /// the subgroup. Decided exactly via Smith Normal Form.
    pub fn contains(&self, x: &GroupElement) -> Option<Vec<Int>> {
        if !self.ambient.contains(x) {
            return None;
        }
        let m = self.span_matrix(&[], false);
        let sol = solve(&m, x.coords())?;
        Some(sol[..self.generators.len()].to_vec())
    }

    pub fn intersect(&self, other: &Subgroup) -> Result<Subgroup> {
        if self.ambient != other.ambient {
            return Err(Error::GroupMismatch);
        }
        // kernel of [S | -T | R]; the S-part of each kernel vector spans S ∩ T
        let m = self.span_matrix(&other.generators, true);
        let s = self.generators.len();
        let mut gens: Vec<GroupElement> = integer_kernel(&m)
            .into_iter()
            .map(|k| self.ambient.combine(k[..s].iter().zip(&self.generators)))
            .filter(|x| !x.is_zero())
            .collect();
        gens.sort();
        gens.dedup();
        Ok(Subgroup {
            ambient: self.ambient.clone(),
            generators: gens,
        })
    }

    /// `ambient / self` in normal form.
    pub fn quotient(&self) -> FinAbGroup {
        PresentedGroup::of_group(&self.ambient)
            .with_relations(self.generators.iter().map(|g| g.coords().to_vec()))
            .normalize()
            .group
    }

    /// Index in the ambient group, `None` if infinite.
    pub fn index(&self) -> Option<Int> {
        self.quotient().order()
    }

    /// Isomorphism type of the subgroup itself.
    pub fn group(&self) -> FinAbGroup {
        // relations among the generators: kernel of [S | R] restricted to S
        let s = self.generators.len();
        let rows = integer_kernel(&self.span_matrix(&[], false))
            .into_iter()
            .map(|k| k[..s].to_vec())
            .collect();
        PresentedGroup::from_relations(s, rows)
            .expect("rows have one entry per generator")
            .normalize()
            .group
    }

    /// Order of the subgroup, `None` if infinite.
    pub fn order(&self) -> Option<Int> {
        self.group().order()
    }
}

/// Elements of order at most 2, generated by `(d_i / 2) e_i` for each even `d_i`.
pub fn tor2(g: &FinAbGroup) -> Subgroup {
    let two = Int::from(2);
    let generators = g
        .even_factor_indices()
        .into_iter()
        .map(|i| g.scale(&g.generator(i), &g.torsion()[i].exact_div(&two)))
        .collect();
    Subgroup {
        ambient: g.clone(),
        generators,
    }
}

/// See [`Subgroup::contains`].
pub fn subgroup_contains(s: &Subgroup, x: &GroupElement) -> Option<Vec<Int>> {
    s.contains(x)
}

/// See [`Subgroup::intersect`].
pub fn intersect_subgroups(s: &Subgroup, t: &Subgroup) -> Result<Subgroup> {
    s.intersect(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn z(d: &[i64], r: usize) -> FinAbGroup {
        FinAbGroup::from_parts(d, r)
    }

    fn el(g: &FinAbGroup, c: &[i64]) -> GroupElement {
        g.element_from_i64(c).unwrap()
    }

    #[test]
    fn membership_in_z4() {
        let g = z(&[4], 0);
        let s = Subgroup::new(g.clone(), vec![el(&g, &[2])]).unwrap();
        assert!(s.contains(&el(&g, &[2])).is_some());
        assert!(s.contains(&el(&g, &[1])).is_none());
    }

    #[test]
    fn membership_with_witness() {
        let g = z(&[], 2);
        let s = Subgroup::new(g.clone(), vec![el(&g, &[2, 0]), el(&g, &[0, 3])]).unwrap();
        let x = el(&g, &[4, 3]);
        let c = s.contains(&x).unwrap();
        assert_eq!(g.combine(c.iter().zip(s.generators())), x);
        assert!(s.contains(&el(&g, &[1, 3])).is_none());
    }

    #[test]
    fn tor2_cases() {
        assert!(tor2(&z(&[3], 1)).is_trivial());
        let t = tor2(&z(&[4], 0));
        assert_eq!(t.generators(), [el(&z(&[4], 0), &[2])]);
        let t = tor2(&z(&[2, 4], 0));
        assert_eq!(t.order(), Some(Int::from(4)));
    }

    #[test]
    fn intersections() {
        let g = z(&[8], 0);
        let whole = Subgroup::whole(g.clone());
        let s = Subgroup::new(g.clone(), vec![el(&g, &[2])]).unwrap();
        let t = Subgroup::new(g.clone(), vec![el(&g, &[4])]).unwrap();
        let st = s.intersect(&t).unwrap();
        assert_eq!(st.order(), Some(Int::from(2)));
        assert!(st.contains(&el(&g, &[4])).is_some());
        assert_eq!(whole.intersect(&t).unwrap().order(), t.order());

        let g = z(&[2, 2], 0);
        let s = Subgroup::new(g.clone(), vec![el(&g, &[1, 1])]).unwrap();
        let t = Subgroup::new(g.clone(), vec![el(&g, &[1, 0])]).unwrap();
        assert!(s.intersect(&t).unwrap().is_trivial());
    }

    #[test]
    fn infinite_intersection() {
        let g = z(&[], 1);
        let s = Subgroup::new(g.clone(), vec![el(&g, &[4])]).unwrap();
        let t = Subgroup::new(g.clone(), vec![el(&g, &[6])]).unwrap();
        let st = s.intersect(&t).unwrap();
        assert_eq!(st.group(), z(&[], 1));
        assert!(st.contains(&el(&g, &[12])).is_some());
        assert!(st.contains(&el(&g, &[6])).is_none());
        assert_eq!(st.index(), Some(Int::from(12)));
    }
}
