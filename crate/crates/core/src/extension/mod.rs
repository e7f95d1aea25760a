//! Central extensions `0 -> Z_2 -> E -> B -> 0`.
//!
//! Such an extension is determined by the homomorphism `Tor_2(B) -> Z_2`
//! sending `b` to the class `t` with `2 * lift(b) = t`. A [`Z2Functional`]
//! records that homomorphism by its values on the canonical generators
//! `c_i = (d_i / 2) g_i` of `Tor_2(B)`, one per even invariant factor.

mod oracle;

use alloc::vec::Vec;

pub use oracle::{abelian_groups_of_order, brute_force_extension_oracle, order_profile};

use crate::abelian::{FinAbGroup, GroupElement, GroupHom};
use crate::error::{Error, Result};
use crate::int::Int;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Z2Functional {
    base: FinAbGroup,
    bits: Vec<bool>,
}

impl Z2Functional {
    pub fn new(base: FinAbGroup, bits: Vec<bool>) -> Result<Self> {
        let expected = base.even_factor_indices().len();
        if bits.len() != expected {
            return Err(Error::FunctionalLength {
                expected,
                found: bits.len(),
            });
        }
        Ok(Z2Functional { base, bits })
    }

    pub fn zero(base: FinAbGroup) -> Self {
        let n = base.even_factor_indices().len();
        Z2Functional {
            base,
            bits: alloc::vec![false; n],
        }
    }

    pub fn base(&self) -> &FinAbGroup {
        &self.base
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits.iter().all(|b| !b)
    }

    /// Value on an element of order at most 2.
    pub fn eval(&self, x: &GroupElement) -> Result<bool> {
        let g = &self.base;
        if !g.contains(x) {
            return Err(Error::NotAnElement(alloc::format!("{x:?} in {g}")));
        }
        if x.free_coords(g).iter().any(|c| !c.is_zero()) {
            return Err(Error::NotTwoTorsion);
        }
        let two = Int::from(2);
        let mut value = false;
        let mut bit = self.bits.iter();
        for (c, d) in x.torsion_coords(g).iter().zip(g.torsion()) {
            let doubled = (c * &two).rem_euclid(d);
            if !doubled.is_zero() {
                return Err(Error::NotTwoTorsion);
            }
            if d.is_even() {
                let b = *bit.next().expect("one bit per even factor");
                // 2c = 0 mod d leaves c in {0, d/2}
                value ^= b && !c.is_zero();
            }
        }
        Ok(value)
    }

    /// The functional `self ∘ h` on the source of `h`.
    pub fn pull_back(&self, h: &GroupHom) -> Result<Z2Functional> {
        if h.target() != &self.base {
            return Err(Error::GroupMismatch);
        }
        let src = h.source();
        let two = Int::from(2);
        let bits = src
            .even_factor_indices()
            .into_iter()
            .map(|i| {
                let c = src.scale(&src.generator(i), &src.torsion()[i].exact_div(&two));
                self.eval(&h.apply(&c))
            })
            .collect::<Result<Vec<_>>>()?;
        Z2Functional::new(src.clone(), bits)
    }
}

/// See [`Z2Functional::eval`].
pub fn eval_functional(phi: &Z2Functional, x: &GroupElement) -> Result<bool> {
    phi.eval(x)
}

/// Isomorphism type of the extension of `b` by `Z_2` classified by `phi`.
///
/// With all bits zero the extension splits. Otherwise a change of basis
/// concentrates `phi` on the bit-1 summand `Z_{2^k}` of largest exponent
/// (adding `2^(k - k_j)` times its generator to each other bit-1 generator
/// of exponent `k_j` clears that bit), and the extension replaces that summand
/// by `Z_{2^(k+1)}`.
pub fn classify_extension(b: &FinAbGroup, phi: &Z2Functional) -> Result<FinAbGroup> {
    if phi.base() != b {
        return Err(Error::GroupMismatch);
    }
    if phi.is_zero() {
        return Ok(b.direct_sum(&FinAbGroup::from_parts(&[2], 0)));
    }
    let (mut exps, odd) = b.two_primary_split();
    let even = b.even_factor_indices();
    let bump = even
        .iter()
        .zip(phi.bits())
        .filter(|(_, bit)| **bit)
        .map(|(&i, _)| i)
        .max_by_key(|&i| exps[i])
        .expect("some bit is set");
    exps[bump] += 1;
    let two = Int::from(2);
    let orders: Vec<Int> = exps
        .iter()
        .map(|&k| two.pow(k))
        .chain(odd)
        .chain(core::iter::repeat_n(Int::ZERO, b.free_rank()))
        .collect();
    Ok(FinAbGroup::from_cyclic_orders(&orders))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn phi(d: &[i64], r: usize, bits: &[bool]) -> (FinAbGroup, Z2Functional) {
        let b = FinAbGroup::from_parts(d, r);
        let f = Z2Functional::new(b.clone(), bits.to_vec()).unwrap();
        (b, f)
    }

    #[test]
    fn eval_examples() {
        let (b, f) = phi(&[2, 4], 0, &[true, true]);
        assert!(!f.eval(&b.zero()).unwrap());
        assert!(!f.eval(&b.element_from_i64(&[1, 2]).unwrap()).unwrap());
        assert!(f.eval(&b.element_from_i64(&[0, 2]).unwrap()).unwrap());
        assert!(matches!(
            f.eval(&b.element_from_i64(&[0, 1]).unwrap()),
            Err(Error::NotTwoTorsion)
        ));
        let (b, f) = phi(&[2], 0, &[true]);
        assert!(f.eval(&b.generator(0)).unwrap());
    }

    #[test]
    fn eval_rejects_free_part() {
        let (b, f) = phi(&[2], 1, &[true]);
        assert!(matches!(f.eval(&b.generator(1)), Err(Error::NotTwoTorsion)));
    }

    #[test]
    fn functional_length_checked() {
        let b = FinAbGroup::from_parts(&[3, 6], 0);
        assert!(Z2Functional::new(b.clone(), vec![true, false]).is_err());
        assert!(Z2Functional::new(b, vec![true]).is_ok());
    }

    #[test]
    fn split_case() {
        let (b, f) = phi(&[2], 0, &[false]);
        assert_eq!(classify_extension(&b, &f).unwrap(), FinAbGroup::from_parts(&[2, 2], 0));
    }

    #[test]
    fn single_bump() {
        // Z_8 + Z_3 + Z with the bit on Z_8 (factor 24)
        let (b, f) = phi(&[24], 1, &[true]);
        assert_eq!(classify_extension(&b, &f).unwrap(), FinAbGroup::from_parts(&[48], 1));
        let (b, f) = phi(&[2, 4], 0, &[false, true]);
        assert_eq!(classify_extension(&b, &f).unwrap(), FinAbGroup::from_parts(&[2, 8], 0));
        let (b, f) = phi(&[2, 4], 0, &[true, false]);
        assert_eq!(classify_extension(&b, &f).unwrap(), FinAbGroup::from_parts(&[4, 4], 0));
    }

    #[test]
    fn both_bits_bump_the_larger_summand() {
        // lift of the Z_4 generator has order 8
        let (b, f) = phi(&[2, 4], 0, &[true, true]);
        assert_eq!(classify_extension(&b, &f).unwrap(), FinAbGroup::from_parts(&[2, 8], 0));
        assert_eq!(
            brute_force_extension_oracle(&b, &f).unwrap(),
            FinAbGroup::from_parts(&[2, 8], 0)
        );
    }

    #[test]
    fn pull_back_along_iso() {
        // Z_4 + Z_3 ≅ Z_12, bit on the Z_4 part
        let (b, f) = phi(&[12], 0, &[true]);
        let id = GroupHom::identity(b.clone());
        assert_eq!(f.pull_back(&id).unwrap(), f);
        let triple = id.scaled(&Int::from(3));
        // 3 * 6 = 18 = 6 mod 12, so the 2-torsion generator is fixed
        assert!(f.pull_back(&triple).unwrap().bits()[0]);
    }
}
