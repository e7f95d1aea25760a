//! Cohomotopy of a 4-manifold from its homological data.
//!
//! `pi^3(X)` is the framed bordism group of links, computed from an explicit
//! presentation; `pi^2(X)` fibers over the classes of self-intersection zero,
//! and the fiber over `alpha` is the quotient of that presentation by the
//! doubled lifts of `alpha . tau`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::abelian::{tor2, FinAbGroup, GroupElement, GroupHom, Normalized, PresentedGroup};
use crate::error::{Error, Result};
use crate::extension::classify_extension;
use crate::int::Int;
use crate::manifold::ManifoldData;
use crate::matrix::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Odd,
    Even,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TypeTag {
    I,
    II,
    III1,
    /// No twisted 2-class among classes with free coordinates in
    /// `[-radius, radius]`.
    III2 { radius: u32 },
}

impl TypeTag {
    pub fn name(&self) -> &'static str {
        match self {
            TypeTag::I => "I",
            TypeTag::II => "II",
            TypeTag::III1 => "III1",
            TypeTag::III2 { .. } => "III2",
        }
    }

    pub fn radius(&self) -> Option<u32> {
        match self {
            TypeTag::III2 { radius } => Some(*radius),
            _ => None,
        }
    }
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeTag::III2 { radius } => write!(f, "III2 (radius {radius})"),
            t => f.write_str(t.name()),
        }
    }
}

/// Odd iff some diagonal entry of `q` is odd.
pub fn parity(x: &ManifoldData) -> Parity {
    let n = x.q.rows();
    if (0..n).any(|i| !x.q[(i, i)].is_even()) {
        Parity::Odd
    } else {
        Parity::Even
    }
}

pub fn is_spin(x: &ManifoldData) -> bool {
    parity(x) == Parity::Even && x.w.is_zero()
}

/// `F_1(X)`: `H_1` when odd, the extension of `H_1` by `Z_2` classified by
/// `w` when even.
pub fn f1_group(x: &ManifoldData) -> FinAbGroup {
    match parity(x) {
        Parity::Odd => x.h1.clone(),
        Parity::Even => classify_extension(&x.h1, &x.w).expect("w lives on h1"),
    }
}

/// Generators `g_1..g_t` (torsion lifts), `f_1..f_r` (free lifts), then `u`
/// when `X` is even.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F1Presentation {
    base: ManifoldData,
    presentation: PresentedGroup,
    has_u: bool,
}

impl F1Presentation {
    pub fn base(&self) -> &ManifoldData {
        &self.base
    }

    pub fn presentation(&self) -> &PresentedGroup {
        &self.presentation
    }

    /// Index of `u`, the class of the unknot with the odd framing.
    pub fn u_index(&self) -> Option<usize> {
        self.has_u.then(|| self.base.h1.num_generators())
    }

    pub fn num_generators(&self) -> usize {
        self.presentation.num_generators()
    }

    /// Coordinatewise lift of an element of `h1`.
    pub fn lift(&self, x: &GroupElement) -> Vec<Int> {
        let mut v = x.coords().to_vec();
        if self.has_u {
            v.push(Int::ZERO);
        }
        v
    }

    pub fn normalize(&self) -> Normalized {
        self.presentation.normalize()
    }

    /// `F_1(X) / <u>`, which is `H_1` again.
    pub fn quotient_by_u(&self) -> FinAbGroup {
        match self.u_index() {
            None => self.normalize().group,
            Some(u) => {
                let mut rel = vec![Int::ZERO; self.num_generators()];
                rel[u] = Int::ONE;
                self.presentation.with_relations([rel]).normalize().group
            }
        }
    }
}

pub fn f1_presentation(x: &ManifoldData) -> F1Presentation {
    let h1 = &x.h1;
    let t = h1.torsion_len();
    let has_u = parity(x) == Parity::Even;
    let n = h1.num_generators() + usize::from(has_u);
    let mut bits = x.w.bits().iter();
    let mut rows: Vec<Vec<Int>> = h1
        .torsion()
        .iter()
        .enumerate()
        .map(|(i, d)| {
            let mut row = vec![Int::ZERO; n];
            row[i] = d.clone();
            if d.is_even() {
                let bit = *bits.next().expect("one bit per even factor");
                if has_u && bit {
                    row[n - 1] = -Int::ONE;
                }
            }
            row
        })
        .collect();
    if has_u {
        let mut row = vec![Int::ZERO; n];
        row[n - 1] = Int::from(2);
        rows.push(row);
    }
    debug_assert!(t <= n);
    F1Presentation {
        base: x.clone(),
        presentation: PresentedGroup::from_relations(n, rows).expect("rows have n entries"),
        has_u,
    }
}

fn check_h2(x: &ManifoldData, alpha: &GroupElement) -> Result<()> {
    if x.h2.contains(alpha) {
        Ok(())
    } else {
        Err(Error::NotAnElement(alloc::format!("{alpha:?} in H_2 = {}", x.h2)))
    }
}

fn check_isotropic(x: &ManifoldData, alpha: &GroupElement) -> Result<()> {
    check_h2(x, alpha)?;
    let s = self_intersection(x, alpha);
    if s.is_zero() {
        Ok(())
    } else {
        Err(Error::NotIsotropic(s))
    }
}

/// `H_3 -> H_1`, `tau -> alpha . tau`.
pub fn i_alpha(x: &ManifoldData, alpha: &GroupElement) -> Result<GroupHom> {
    check_h2(x, alpha)?;
    let images = (0..x.h3_rank).map(|j| x.pair(alpha, j)).collect();
    GroupHom::new(FinAbGroup::free(x.h3_rank), x.h1.clone(), images)
}

pub fn self_intersection(x: &ManifoldData, alpha: &GroupElement) -> Int {
    let v = alpha.free_coords(&x.h2);
    let mut s = Int::ZERO;
    for (i, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        for (j, vj) in v.iter().enumerate() {
            s += &(&(vi * vj) * &x.q[(i, j)]);
        }
    }
    s
}

/// `Some(true)` if positive definite, `Some(false)` if negative definite.
fn definiteness(q: &IntMatrix) -> Option<bool> {
    let n = q.rows();
    if n == 0 {
        return None;
    }
    let minors: Vec<Int> = (1..=n).map(|k| q.leading(k).determinant()).collect();
    if minors.iter().all(|m| m.signum() > 0) {
        return Some(true);
    }
    let alternating = minors
        .iter()
        .enumerate()
        .all(|(k, m)| m.signum() == if k % 2 == 0 { -1 } else { 1 });
    alternating.then_some(false)
}

enum Form {
    Small(Vec<Vec<i128>>),
    Big(IntMatrix),
}

impl Form {
    fn new(q: &IntMatrix) -> Self {
        let rows: Option<Vec<Vec<i128>>> = q
            .to_rows()
            .iter()
            .map(|r| r.iter().map(|v| v.to_i64().map(i128::from)).collect())
            .collect();
        match rows {
            Some(r) => Form::Small(r),
            None => Form::Big(q.clone()),
        }
    }

    fn is_isotropic(&self, v: &[i64]) -> bool {
        match self {
            Form::Small(q) => {
                // |v_i| <= bound, so overflow needs entries and bound near 2^40
                let mut s: i128 = 0;
                for (i, &vi) in v.iter().enumerate() {
                    if vi == 0 {
                        continue;
                    }
                    for (j, &vj) in v.iter().enumerate() {
                        s += i128::from(vi) * i128::from(vj) * q[i][j];
                    }
                }
                s == 0
            }
            Form::Big(q) => {
                let w: Vec<Int> = v.iter().map(|&c| Int::from(c)).collect();
                let qw = q.mul_vec(&w);
                w.iter().zip(&qw).map(|(a, b)| a * b).sum::<Int>().is_zero()
            }
        }
    }
}

/// Steps `v` through `[lo, hi]^n` in lexicographic order; false when done.
fn advance(v: &mut [i64], lo: i64, hi: i64) -> bool {
    for c in v.iter_mut().rev() {
        if *c < hi {
            *c += 1;
            return true;
        }
        *c = lo;
    }
    false
}

/// Free coordinate vectors in the box of self-intersection zero.
fn isotropic_free_vectors(q: &IntMatrix, bound: u32) -> Vec<Vec<i64>> {
    let n = q.rows();
    if n == 0 || definiteness(q).is_some() {
        return vec![vec![0; n]];
    }
    let b = i64::from(bound);
    let form = Form::new(q);
    let mut v = vec![-b; n];
    let mut out = Vec::new();
    loop {
        if form.is_isotropic(&v) {
            out.push(v.clone());
        }
        if !advance(&mut v, -b, b) {
            break;
        }
    }
    out
}

fn torsion_tuples(g: &FinAbGroup) -> Vec<Vec<Int>> {
    let mut out: Vec<Vec<Int>> = vec![Vec::new()];
    for d in g.torsion() {
        let d = d.to_i64().expect("enumerable torsion");
        out = out
            .into_iter()
            .flat_map(|t| {
                (0..d).map(move |c| {
                    let mut t = t.clone();
                    t.push(Int::from(c));
                    t
                })
            })
            .collect();
    }
    out
}

/// Classes of self-intersection zero with free coordinates in
/// `[-bound, bound]`, together with every torsion part, ordered
/// lexicographically by (free coordinates, torsion coordinates).
pub fn h2_zero_classes(x: &ManifoldData, bound: u32) -> Vec<GroupElement> {
    let torsion = torsion_tuples(&x.h2);
    let mut out = Vec::new();
    for v in isotropic_free_vectors(&x.q, bound) {
        for t in &torsion {
            let coords = t.iter().cloned().chain(v.iter().map(|&c| Int::from(c))).collect();
            out.push(x.h2.element(coords).expect("coordinates match h2"));
        }
    }
    out
}

/// Whether `alpha . tau` is a twisted 1-class for some `tau`.
///
/// `{alpha . tau}` is a subgroup, so this checks `w` on generators of its
/// intersection with `Tor_2(H_1)`.
pub fn is_twisted_2class(x: &ManifoldData, alpha: &GroupElement) -> Result<bool> {
    check_isotropic(x, alpha)?;
    if parity(x) == Parity::Odd || x.w.is_zero() {
        return Ok(false);
    }
    let image = i_alpha(x, alpha)?.image_subgroup();
    let s = image.intersect(&tor2(&x.h1))?;
    for g in s.generators() {
        if x.w.eval(g)? {
            return Ok(true);
        }
    }
    Ok(false)
}

pub fn manifold_type(x: &ManifoldData, radius: u32) -> TypeTag {
    if parity(x) == Parity::Odd {
        return TypeTag::I;
    }
    if x.w.is_zero() {
        return TypeTag::II;
    }
    if x.h3_rank > 0 {
        for alpha in h2_zero_classes(x, radius) {
            if is_twisted_2class(x, &alpha).expect("enumerated classes are isotropic") {
                return TypeTag::III1;
            }
        }
    }
    TypeTag::III2 { radius }
}

/// `F_1^alpha`: `F_1(X)` modulo `2 * lift(alpha . tau)` for every `tau`.
pub fn fiber_group(x: &ManifoldData, alpha: &GroupElement) -> Result<FinAbGroup> {
    check_isotropic(x, alpha)?;
    let p = f1_presentation(x);
    Ok(fiber_group_in(&p, alpha))
}

fn fiber_group_in(p: &F1Presentation, alpha: &GroupElement) -> FinAbGroup {
    let x = p.base();
    let two = Int::from(2);
    let rows = (0..x.h3_rank).map(|j| {
        p.lift(&x.pair(alpha, j))
            .into_iter()
            .map(|c| &c * &two)
            .collect::<Vec<_>>()
    });
    p.presentation().with_relations(rows).normalize().group
}

/// One fiber of `pi^2(X) -> H_2°(X)`. Each fiber is a torsor for the group
/// recorded here; only the fiber over `alpha = 0` has a canonical basepoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pi2Row {
    pub alpha: GroupElement,
    pub fiber: FinAbGroup,
    pub twisted: bool,
}

impl Pi2Row {
    pub fn has_basepoint(&self) -> bool {
        self.alpha.is_zero()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomotopyReport {
    pub parity: Parity,
    pub spin: bool,
    pub type_tag: TypeTag,
    pub pi1: FinAbGroup,
    pub pi3: FinAbGroup,
    pub pi4: FinAbGroup,
    pub pi2: Vec<Pi2Row>,
    pub bound: u32,
}

pub fn cohomotopy_report(x: &ManifoldData, bound: u32, radius: u32) -> CohomotopyReport {
    let p = f1_presentation(x);
    let pi2 = h2_zero_classes(x, bound)
        .into_iter()
        .map(|alpha| {
            let twisted = is_twisted_2class(x, &alpha).expect("enumerated classes are isotropic");
            let fiber = fiber_group_in(&p, &alpha);
            Pi2Row {
                alpha,
                fiber,
                twisted,
            }
        })
        .collect();
    CohomotopyReport {
        parity: parity(x),
        spin: is_spin(x),
        type_tag: manifold_type(x, radius),
        pi1: FinAbGroup::free(x.b1()),
        pi3: f1_group(x),
        pi4: FinAbGroup::free(1),
        pi2,
        bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::cokernel;
    use crate::manifold::catalog::*;

    fn g(t: &[i64], r: usize) -> FinAbGroup {
        FinAbGroup::from_parts(t, r)
    }

    fn el(x: &ManifoldData, c: &[i64]) -> GroupElement {
        x.h2.element_from_i64(c).unwrap()
    }

    #[test]
    fn parity_and_spin() {
        assert_eq!(parity(&cp2()), Parity::Odd);
        assert!(!is_spin(&cp2()));
        assert_eq!(parity(&e_nk(2, 1).unwrap()), Parity::Even);
        assert!(is_spin(&e_nk(2, 0).unwrap()));
        assert!(!is_spin(&e_nk(2, 1).unwrap()));
        assert!(is_spin(&t4()));
        assert!(is_spin(&s4()));
    }

    #[test]
    fn theorem_one_examples() {
        assert_eq!(f1_group(&e_nk(2, 1).unwrap()), g(&[4], 0));
        assert_eq!(f1_group(&e_nk(2, 0).unwrap()), g(&[2, 2], 0));
        assert_eq!(f1_group(&s2xs2()), g(&[2], 0));
        assert_eq!(f1_group(&cp2()), g(&[], 0));
        let x = connected_sum(&e_nk(8, 1).unwrap(), &e_nk(3, 0).unwrap());
        assert_eq!(f1_group(&x), g(&[48], 0));
    }

    #[test]
    fn presentation_matches_group() {
        for x in [
            surgered_example(),
            e_nk(2, 0).unwrap(),
            e_nk(6, 1).unwrap(),
            cp2(),
            t4(),
            lens_times_circle(6, 1).unwrap(),
        ] {
            let p = f1_presentation(&x);
            assert_eq!(p.normalize().group, f1_group(&x));
            assert_eq!(p.quotient_by_u(), x.h1);
        }
        let p = f1_presentation(&surgered_example());
        assert_eq!(p.normalize().group, g(&[4], 1));
        assert_eq!(p.u_index(), Some(2));
        assert_eq!(f1_presentation(&cp2()).u_index(), None);
    }

    #[test]
    fn self_intersections() {
        let x = s2xt2();
        assert_eq!(self_intersection(&x, &el(&x, &[3, 0])), Int::ZERO);
        assert_eq!(self_intersection(&x, &el(&x, &[1, 1])), Int::from(2));
        let c = cp2();
        assert_eq!(self_intersection(&c, &el(&c, &[5])), Int::from(25));
    }

    #[test]
    fn zero_classes() {
        let two_cp2 = connected_sum(&cp2(), &cp2());
        assert_eq!(h2_zero_classes(&two_cp2, 4).len(), 1);
        let x = connected_sum(&cp2(), &cp2bar());
        let z = h2_zero_classes(&x, 3);
        assert_eq!(z.len(), 13);
        for a in &z {
            let c = a.coords();
            assert_eq!(c[0].abs(), c[1].abs());
        }
        assert_eq!(h2_zero_classes(&s4(), 3), vec![s4().h2.zero()]);
        assert_eq!(h2_zero_classes(&e8(), 5).len(), 1);
    }

    #[test]
    fn zero_classes_include_torsion() {
        let x = lens_times_circle(4, 1).unwrap();
        let z = h2_zero_classes(&x, 2);
        assert_eq!(z.len(), 4);
        assert!(z.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn surgered_twisted_classes() {
        let x = surgered_example();
        assert!(is_twisted_2class(&x, &el(&x, &[0, 1, 0])).unwrap());
        assert!(is_twisted_2class(&x, &el(&x, &[1, 3, 0])).unwrap());
        assert!(!is_twisted_2class(&x, &el(&x, &[0, 0, 1])).unwrap());
        assert!(!is_twisted_2class(&x, &el(&x, &[0, 2, 0])).unwrap());
        assert!(is_twisted_2class(&x, &el(&x, &[0, 1, 1])).is_err());
        assert_eq!(manifold_type(&x, 1), TypeTag::III1);
        assert_eq!(fiber_group(&x, &el(&x, &[0, 1, 0])).unwrap(), g(&[2], 1));
        assert_eq!(fiber_group(&x, &el(&x, &[0, 0, 1])).unwrap(), g(&[4], 1));
    }

    #[test]
    fn types() {
        assert_eq!(manifold_type(&cp2(), 3), TypeTag::I);
        assert_eq!(manifold_type(&t4(), 3), TypeTag::II);
        assert_eq!(manifold_type(&e_nk(2, 1).unwrap(), 4), TypeTag::III2 { radius: 4 });
    }

    #[test]
    fn i_alpha_examples() {
        let x = surgered_example();
        let h = i_alpha(&x, &el(&x, &[0, 1, 0])).unwrap();
        assert_eq!(h.images(), [x.h1.generator(0)]);
        assert!(i_alpha(&x, &x.h2.zero()).unwrap().is_zero());
    }

    #[test]
    fn lens_fibers() {
        for p in 1..=8u32 {
            let x = lens_times_circle(p, 1).unwrap();
            for a in h2_zero_classes(&x, 1) {
                let k = if x.h2.torsion_len() == 0 { 0 } else { a.coords()[0].to_i64().unwrap() };
                let gcd = Int::from(2 * k).gcd(&Int::from(p as i64)).to_i64().unwrap();
                let expected = FinAbGroup::from_cyclic_orders(&[Int::from(gcd), Int::ZERO, Int::from(2)]);
                assert_eq!(fiber_group(&x, &a).unwrap(), expected, "p = {p}, k = {k}");
            }
        }
    }

    #[test]
    fn s4_report() {
        let r = cohomotopy_report(&s4(), 5, 5);
        assert_eq!(r.pi3, g(&[2], 0));
        assert_eq!(r.pi1, g(&[], 0));
        assert_eq!(r.pi4, g(&[], 1));
        assert_eq!(r.pi2.len(), 1);
        assert_eq!(r.pi2[0].fiber, g(&[2], 0));
        assert!(r.pi2[0].has_basepoint());
        let r = cohomotopy_report(&cp2(), 5, 5);
        assert_eq!(r.pi2.len(), 1);
        assert!(r.pi2[0].fiber.is_trivial());
    }

    #[test]
    fn odd_fiber_is_cokernel_of_double() {
        let x = connected_sum(&cp2(), &lens_times_circle(4, 1).unwrap());
        for a in h2_zero_classes(&x, 2) {
            let h = i_alpha(&x, &a).unwrap().scaled(&Int::from(2));
            assert_eq!(fiber_group(&x, &a).unwrap(), cokernel(&h).0);
        }
    }

    #[test]
    fn rejects_non_isotropic() {
        let c = cp2();
        assert_eq!(fiber_group(&c, &el(&c, &[1])), Err(Error::NotIsotropic(Int::ONE)));
    }
}
