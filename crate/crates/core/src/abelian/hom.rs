use alloc::vec::Vec;

use super::group::{FinAbGroup, GroupElement};
use super::presentation::PresentedGroup;
use super::subgroup::Subgroup;
use crate::error::{Error, Result};
use crate::int::Int;

/// A homomorphism given by the images of the source generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    source: FinAbGroup,
    target: FinAbGroup,
    images: Vec<GroupElement>,
}

impl GroupHom {
    /// Checks that each torsion generator of order `d` maps to an element
    /// killed by `d`.
    pub fn new(source: FinAbGroup, target: FinAbGroup, images: Vec<GroupElement>) -> Result<Self> {
        if images.len() != source.num_generators() {
            return Err(Error::DimensionMismatch {
                expected: source.num_generators(),
                found: images.len(),
            });
        }
        if let Some(bad) = images.iter().find(|y| !target.contains(y)) {
            return Err(Error::NotAnElement(alloc::format!("{bad:?} in {target}")));
        }
        for (i, d) in source.torsion().iter().enumerate() {
            if !target.scale(&images[i], d).is_zero() {
                return Err(Error::NotWellDefined { generator: i });
            }
        }
        Ok(GroupHom {
            source,
            target,
            images,
        })
    }

    pub fn zero(source: FinAbGroup, target: FinAbGroup) -> Self {
        let images = alloc::vec![target.zero(); source.num_generators()];
        GroupHom {
            source,
            target,
            images,
        }
    }

    pub fn identity(g: FinAbGroup) -> Self {
        let images = (0..g.num_generators()).map(|i| g.generator(i)).collect();
        GroupHom {
            source: g.clone(),
            target: g,
            images,
        }
    }

    pub fn source(&self) -> &FinAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FinAbGroup {
        &self.target
    }

    pub fn images(&self) -> &[GroupElement] {
        &self.images
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(GroupElement::is_zero)
    }

    pub fn apply(&self, x: &GroupElement) -> GroupElement {
        self.target.combine(x.coords().iter().zip(&self.images))
    }

    /// `c * f`.
    pub fn scaled(&self, c: &Int) -> GroupHom {
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            images: self.images.iter().map(|y| self.target.scale(y, c)).collect(),
        }
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &GroupHom) -> Result<GroupHom> {
        if first.target != self.source {
            return Err(Error::GroupMismatch);
        }
        let images = first.images.iter().map(|y| self.apply(y)).collect();
        Ok(GroupHom {
            source: first.source.clone(),
            target: self.target.clone(),
            images,
        })
    }

    /// `target / im(f)` in normal form, with the projection onto it.
    pub fn cokernel(&self) -> (FinAbGroup, GroupHom) {
        let pres = PresentedGroup::of_group(&self.target)
            .with_relations(self.images.iter().map(|y| y.coords().to_vec()));
        let n = pres.normalize();
        let projection = GroupHom {
            source: self.target.clone(),
            target: n.group.clone(),
            images: n.coordinates,
        };
        (n.group, projection)
    }

    pub fn image_subgroup(&self) -> Subgroup {
        Subgroup::new(self.target.clone(), self.images.clone())
            .expect("images lie in the target")
    }
}

/// See [`GroupHom::cokernel`].
pub fn cokernel(f: &GroupHom) -> (FinAbGroup, GroupHom) {
    f.cokernel()
}

/// See [`GroupHom::image_subgroup`].
pub fn image_subgroup(f: &GroupHom) -> Subgroup {
    f.image_subgroup()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn identity_has_trivial_cokernel() {
        let (q, p) = GroupHom::identity(FinAbGroup::free(2)).cokernel();
        assert!(q.is_trivial());
        assert!(p.is_zero());
    }

    #[test]
    fn doubling_on_z2() {
        let f = GroupHom::identity(FinAbGroup::free(2)).scaled(&Int::from(2));
        let (q, p) = f.cokernel();
        assert_eq!(q, FinAbGroup::from_parts(&[2, 2], 0));
        assert!(p.compose(&f).unwrap().is_zero());
    }

    #[test]
    fn rejects_ill_defined() {
        let z2 = FinAbGroup::from_parts(&[2], 0);
        let z = FinAbGroup::free(1);
        let bad = GroupHom::new(z2, z.clone(), vec![z.generator(0)]);
        assert!(matches!(bad, Err(Error::NotWellDefined { generator: 0 })));
    }

    #[test]
    fn image_of_single_generator() {
        let t = FinAbGroup::from_parts(&[2], 1);
        let f = GroupHom::new(FinAbGroup::free(1), t.clone(), vec![t.generator(0)]).unwrap();
        let s = f.image_subgroup();
        assert!(s.contains(&t.generator(0)).is_some());
        assert!(s.contains(&t.generator(1)).is_none());
        assert_eq!(s.order(), Some(Int::from(2)));
        assert_eq!(s.index(), None);
    }
}
