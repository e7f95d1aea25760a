//! Homological data of a closed oriented 4-manifold.
//!
//! Generator ordering is torsion first (invariant-factor order), then free,
//! for every group here. The intersection form lives on the free generators
//! of `H_2` only; torsion classes pair to zero in `Z`.

pub mod catalog;

use alloc::vec::Vec;
use core::fmt;

use crate::abelian::{FinAbGroup, GroupElement, PresentedGroup};
use crate::error::{Error, Result};
use crate::extension::Z2Functional;
use crate::int::Int;
use crate::matrix::IntMatrix;

pub use catalog::{
    connected_sum, e_nk, lens_space_y, product_with_circle, s2xs1_y, simply_connected,
    surgered_example, three_torus_y,
};

/// A failed constraint on [`ManifoldData`] or [`ThreeManifoldData`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    QShape { expected: usize, rows: usize, cols: usize },
    QNotSymmetric,
    B3NotB1 { b3: usize, b1: usize },
    TorsionMismatch,
    QNotUnimodular { det: Int },
    MuShape,
    MuNotInH1 { h2_gen: usize, h3_gen: usize },
    MuNotWellDefined { h2_gen: usize, h3_gen: usize },
    WBaseMismatch,
    PairingShape,
    PairingNotInH1 { i: usize, j: usize },
    PairingNotAntisymmetric { i: usize, j: usize },
    Pairing21NotUnimodular { det: Int },
}

impl Violation {
    /// Constraints coming from Poincaré duality that a permissive caller may
    /// downgrade to warnings.
    pub fn is_duality(&self) -> bool {
        matches!(self, Violation::TorsionMismatch | Violation::QNotUnimodular { .. })
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::QShape { expected, rows, cols } => {
                write!(f, "q has shape {rows}x{cols}, expected {expected}x{expected}")
            }
            Violation::QNotSymmetric => f.write_str("q not symmetric"),
            Violation::B3NotB1 { b3, b1 } => write!(f, "b3 ≠ b1 (b3 = {b3}, b1 = {b1})"),
            Violation::TorsionMismatch => f.write_str("torsion of h2 differs from torsion of h1"),
            Violation::QNotUnimodular { det } => write!(f, "q not unimodular (det = {det})"),
            Violation::MuShape => f.write_str("mu table has the wrong shape"),
            Violation::MuNotInH1 { h2_gen, h3_gen } => {
                write!(f, "mu({h2_gen}, {h3_gen}) is not a reduced element of h1")
            }
            Violation::MuNotWellDefined { h2_gen, h3_gen } => write!(
                f,
                "mu({h2_gen}, {h3_gen}) is not killed by the order of h2 generator {h2_gen}"
            ),
            Violation::WBaseMismatch => f.write_str("w is not a functional on h1"),
            Violation::PairingShape => f.write_str("pairing tables have the wrong shape"),
            Violation::PairingNotInH1 { i, j } => {
                write!(f, "pairing22({i}, {j}) is not a reduced element of H1(Y)")
            }
            Violation::PairingNotAntisymmetric { i, j } => {
                write!(f, "pairing22 not antisymmetric at ({i}, {j})")
            }
            Violation::Pairing21NotUnimodular { det } => {
                write!(f, "pairing21 not unimodular (det = {det})")
            }
        }
    }
}

/// Homological presentation of a smooth closed oriented connected 4-manifold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ManifoldData {
    pub h1: FinAbGroup,
    pub h2: FinAbGroup,
    /// `H_3` is free of this rank.
    pub h3_rank: usize,
    /// Intersection form on the free generators of `h2`.
    pub q: IntMatrix,
    /// `mu[i][j]` is the intersection of `h2` generator `i` with `H_3`
    /// generator `j`, an element of `h1`.
    pub mu: Vec<Vec<GroupElement>>,
    /// Characteristic functional on `Tor_2(h1)`; meaningful only when `q` is even.
    pub w: Z2Functional,
}

impl ManifoldData {
    /// Data with zero pairing `mu` and zero functional.
    pub fn with_zero_pairings(h1: FinAbGroup, h2: FinAbGroup, h3_rank: usize, q: IntMatrix) -> Self {
        let mu = alloc::vec![alloc::vec![h1.zero(); h3_rank]; h2.num_generators()];
        let w = Z2Functional::zero(h1.clone());
        ManifoldData {
            h1,
            h2,
            h3_rank,
            q,
            mu,
            w,
        }
    }

    /// The first Betti number.
    pub fn b1(&self) -> usize {
        self.h1.free_rank()
    }

    pub fn b2(&self) -> usize {
        self.h2.free_rank()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let b2 = self.h2.free_rank();
        let q_ok = self.q.rows() == b2 && self.q.cols() == b2;
        if !q_ok {
            out.push(Violation::QShape {
                expected: b2,
                rows: self.q.rows(),
                cols: self.q.cols(),
            });
        } else if !self.q.is_symmetric() {
            out.push(Violation::QNotSymmetric);
        }
        if self.h3_rank != self.h1.free_rank() {
            out.push(Violation::B3NotB1 {
                b3: self.h3_rank,
                b1: self.h1.free_rank(),
            });
        }
        if self.h1.torsion() != self.h2.torsion() {
            out.push(Violation::TorsionMismatch);
        }
        if q_ok && b2 > 0 {
            let det = self.q.determinant();
            if det.abs() != Int::ONE {
                out.push(Violation::QNotUnimodular { det });
            }
        }
        let shape_ok = self.mu.len() == self.h2.num_generators()
            && self.mu.iter().all(|row| row.len() == self.h3_rank);
        if !shape_ok {
            out.push(Violation::MuShape);
        } else {
            for (i, row) in self.mu.iter().enumerate() {
                let order = self.h2.generator_order(i);
                for (j, x) in row.iter().enumerate() {
                    if !self.h1.contains(x) {
                        out.push(Violation::MuNotInH1 { h2_gen: i, h3_gen: j });
                    } else if !order.is_zero() && !self.h1.scale(x, &order).is_zero() {
                        out.push(Violation::MuNotWellDefined { h2_gen: i, h3_gen: j });
                    }
                }
            }
        }
        if self.w.base() != &self.h1 {
            out.push(Violation::WBaseMismatch);
        }
        out
    }

    /// Fails with every violation if any constraint does not hold.
    pub fn validated(self) -> Result<Self> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(Error::Invalid(v))
        }
    }

    /// `alpha . tau_j` for `alpha` in `h2`, extended bilinearly.
    pub fn pair(&self, alpha: &GroupElement, h3_gen: usize) -> GroupElement {
        self.h1.combine(
            alpha
                .coords()
                .iter()
                .zip(self.mu.iter().map(|row| &row[h3_gen])),
        )
    }
}

/// Homological data of a closed oriented 3-manifold `Y`, enough to build `Y x S^1`.
///
/// `H_2(Y)` is free of rank `b1(Y)`. `pairing21` is the integer pairing of
/// `H_2(Y)` with the free part of `H_1(Y)` (torsion pairs to zero), so it is
/// stored as a `b1 x b1` matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeManifoldData {
    pub h1y: FinAbGroup,
    /// `pairing22[i][j]` in `H_1(Y)`; antisymmetric.
    pub pairing22: Vec<Vec<GroupElement>>,
    pub pairing21: IntMatrix,
}

impl ThreeManifoldData {
    pub fn b1(&self) -> usize {
        self.h1y.free_rank()
    }

    pub fn validate(&self) -> Vec<Violation> {
        let b = self.b1();
        let mut out = Vec::new();
        let shape_ok = self.pairing22.len() == b
            && self.pairing22.iter().all(|r| r.len() == b)
            && self.pairing21.rows() == b
            && self.pairing21.cols() == b;
        if !shape_ok {
            out.push(Violation::PairingShape);
            return out;
        }
        for i in 0..b {
            for j in 0..b {
                let x = &self.pairing22[i][j];
                if !self.h1y.contains(x) {
                    out.push(Violation::PairingNotInH1 { i, j });
                } else if j >= i && self.h1y.neg(x) != self.pairing22[j][i] {
                    out.push(Violation::PairingNotAntisymmetric { i, j });
                }
            }
        }
        if b > 0 {
            let det = self.pairing21.determinant();
            if det.abs() != Int::ONE {
                out.push(Violation::Pairing21NotUnimodular { det });
            }
        }
        out
    }
}

/// `a_torsion + b_torsion` renormalized; free parts are concatenated unchanged.
pub(crate) struct DirectSum {
    pub group: FinAbGroup,
    left: FinAbGroup,
    right: FinAbGroup,
    // images of the old torsion generators (left's, then right's) in group
    torsion_images: Vec<GroupElement>,
    // for each new torsion generator, a combination of old torsion generators
    torsion_lifts: Vec<Vec<Int>>,
}

impl DirectSum {
    pub fn new(left: &FinAbGroup, right: &FinAbGroup) -> Self {
        let tl = left.torsion_len();
        let tr = right.torsion_len();
        let rel = IntMatrix::from_fn(tl + tr, tl + tr, |i, j| {
            if i != j {
                Int::ZERO
            } else if i < tl {
                left.torsion()[i].clone()
            } else {
                right.torsion()[i - tl].clone()
            }
        });
        let n = PresentedGroup::new(tl + tr, rel)
            .expect("square relation matrix")
            .normalize();
        debug_assert!(n.group.is_finite());
        let group = FinAbGroup::new(
            n.group.torsion().to_vec(),
            left.free_rank() + right.free_rank(),
        )
        .expect("normalized torsion");
        DirectSum {
            group,
            left: left.clone(),
            right: right.clone(),
            torsion_images: n.coordinates,
            torsion_lifts: n.lifts,
        }
    }

    fn embed(&self, torsion_offset: usize, free_offset: usize, tors: &[Int], free: &[Int]) -> GroupElement {
        let mut coords = self
            .group
            .combine(tors.iter().zip(&self.torsion_images[torsion_offset..]))
            .into_coords();
        let t = self.group.torsion_len();
        for (k, c) in free.iter().enumerate() {
            coords[t + free_offset + k] = c.clone();
        }
        self.group.element(coords).expect("length matches")
    }

    pub fn embed_left(&self, x: &GroupElement) -> GroupElement {
        self.embed(0, 0, x.torsion_coords(&self.left), x.free_coords(&self.left))
    }

    pub fn embed_right(&self, x: &GroupElement) -> GroupElement {
        self.embed(
            self.left.torsion_len(),
            self.left.free_rank(),
            x.torsion_coords(&self.right),
            x.free_coords(&self.right),
        )
    }

    /// Preimage of generator `j` of the sum, split into its two components.
    pub fn split_generator(&self, j: usize) -> (GroupElement, GroupElement) {
        self.split_scaled_generator(j, &Int::ONE)
    }

    /// Preimage of `c` times generator `j`, split into components.
    pub fn split_scaled_generator(&self, j: usize, c: &Int) -> (GroupElement, GroupElement) {
        let tl = self.left.torsion_len();
        let t = self.group.torsion_len();
        let mut a = self.left.zero().into_coords();
        let mut b = self.right.zero().into_coords();
        if j < t {
            let lift = &self.torsion_lifts[j];
            for (k, v) in lift.iter().enumerate() {
                let v = v * c;
                if k < tl {
                    a[k] = v;
                } else {
                    b[k - tl] = v;
                }
            }
        } else {
            let f = j - t;
            let fl = self.left.free_rank();
            if f < fl {
                a[self.left.torsion_len() + f] = c.clone();
            } else {
                b[self.right.torsion_len() + f - fl] = c.clone();
            }
        }
        (
            self.left.element(a).expect("length matches"),
            self.right.element(b).expect("length matches"),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn non_symmetric_q() {
        let mut x = simply_connected(IntMatrix::from_rows([[0, 1], [1, 0]])).unwrap();
        x.q = IntMatrix::from_rows([[0, 1], [-1, 0]]);
        assert_eq!(x.validate(), vec![Violation::QNotSymmetric]);
        assert_eq!(alloc::format!("{}", x.validate()[0]), "q not symmetric");
    }

    #[test]
    fn b3_mismatch() {
        let mut x = catalog::t4();
        x.h3_rank = 3;
        for row in &mut x.mu {
            row.truncate(3);
        }
        let v = x.validate();
        assert_eq!(v, vec![Violation::B3NotB1 { b3: 3, b1: 4 }]);
        assert!(alloc::format!("{}", v[0]).starts_with("b3 ≠ b1"));
    }

    #[test]
    fn duality_violations_flagged() {
        let mut x = e_nk(2, 0).unwrap();
        x.h2 = FinAbGroup::from_parts(&[4], 0);
        x.mu = vec![vec![]];
        let v = x.validate();
        assert_eq!(v, vec![Violation::TorsionMismatch]);
        assert!(v[0].is_duality());
        let mut y = simply_connected(IntMatrix::from_rows([[1]])).unwrap();
        y.q = IntMatrix::from_rows([[2]]);
        assert!(y.validate()[0].is_duality());
    }

    #[test]
    fn mu_well_definedness() {
        let mut x = catalog::surgered_example();
        // torsion generator alpha_1 has order 2; the free generator of h1 has infinite order
        x.mu[0][0] = x.h1.generator(1);
        assert_eq!(
            x.validate(),
            vec![Violation::MuNotWellDefined { h2_gen: 0, h3_gen: 0 }]
        );
    }

    #[test]
    fn direct_sum_transports_generators() {
        let a = FinAbGroup::from_parts(&[4], 1);
        let b = FinAbGroup::from_parts(&[3], 0);
        let s = DirectSum::new(&a, &b);
        assert_eq!(s.group, FinAbGroup::from_parts(&[12], 1));
        let x = s.embed_left(&a.generator(0));
        assert_eq!(s.group.element_order(&x), Int::from(4));
        let y = s.embed_right(&b.generator(0));
        assert_eq!(s.group.element_order(&y), Int::from(3));
        let (la, lb) = s.split_generator(0);
        assert_eq!(s.group.add(&s.embed_left(&la), &s.embed_right(&lb)), s.group.generator(0));
        let (fa, fb) = s.split_generator(1);
        assert_eq!(fa, a.generator(1));
        assert!(fb.is_zero());
    }
}
