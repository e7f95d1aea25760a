//! Brute-force identification of `Z_2`-extensions of small finite groups.
//!
//! The extension is built as a concrete set `B x Z_2` whose addition uses
//! the carry cocycle: adding `a_i + b_i >= d_i` in an even factor carries
//! `phi(c_i)` into the `Z_2` coordinate. The induced functional is then
//! checked element by element, and the isomorphism type is found by
//! comparing element-order histograms against every abelian group of the
//! right order. Nothing here goes through Smith Normal Form.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::Z2Functional;
use crate::abelian::FinAbGroup;
use crate::error::{Error, Result};
use crate::int::Int;

/// Largest base group the oracle accepts.
pub const MAX_ORACLE_ORDER: usize = 256;

/// Number of elements of each order.
pub fn order_profile(g: &FinAbGroup) -> BTreeMap<Int, usize> {
    let mut hist = BTreeMap::new();
    for x in g.elements() {
        *hist.entry(g.element_order(&x)).or_insert(0) += 1;
    }
    hist
}

fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return alloc::vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=n.min(max)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every abelian group of order `n`, each exactly once.
pub fn abelian_groups_of_order(n: &Int) -> Vec<FinAbGroup> {
    let primes = FinAbGroup::new(alloc::vec![n.clone()], 0)
        .map(|g| g.primary_decomposition())
        .unwrap_or_default();
    let mut groups: Vec<Vec<Int>> = alloc::vec![Vec::new()];
    for (p, e) in primes {
        let mut next = Vec::new();
        for part in partitions(e, e) {
            for g in &groups {
                let mut orders = g.clone();
                orders.extend(part.iter().map(|&k| p.pow(k)));
                next.push(orders);
            }
        }
        groups = next;
    }
    let mut out: Vec<FinAbGroup> = groups
        .iter()
        .map(|o| FinAbGroup::from_cyclic_orders(o))
        .collect();
    out.sort_by(|a, b| a.torsion().cmp(b.torsion()));
    out.dedup();
    out
}

struct Extension {
    radices: Vec<usize>,
    carries: Vec<bool>,
}

impl Extension {
    // element = (coords in B, bit in Z_2)
    fn add(&self, a: &(Vec<usize>, bool), b: &(Vec<usize>, bool)) -> (Vec<usize>, bool) {
        let mut bit = a.1 ^ b.1;
        let coords = a
            .0
            .iter()
            .zip(&b.0)
            .zip(self.radices.iter().zip(&self.carries))
            .map(|((&x, &y), (&d, &carry))| {
                let s = x + y;
                if s >= d {
                    bit ^= carry;
                    s - d
                } else {
                    s
                }
            })
            .collect();
        (coords, bit)
    }

    fn is_zero(x: &(Vec<usize>, bool)) -> bool {
        !x.1 && x.0.iter().all(|&c| c == 0)
    }

    fn order(&self, x: &(Vec<usize>, bool)) -> usize {
        let mut acc = x.clone();
        let mut n = 1;
        while !Self::is_zero(&acc) {
            acc = self.add(&acc, x);
            n += 1;
        }
        n
    }

    fn elements(&self) -> Vec<(Vec<usize>, bool)> {
        let mut out = alloc::vec![(Vec::new(), false), (Vec::new(), true)];
        for &d in &self.radices {
            out = out
                .into_iter()
                .flat_map(|(c, bit)| {
                    (0..d).map(move |v| {
                        let mut c = c.clone();
                        c.push(v);
                        (c, bit)
                    })
                })
                .collect();
        }
        out
    }
}

/// Test oracle: the extension classified by `phi`, identified by enumeration.
///
/// Fails if `b` is infinite or larger than [`MAX_ORACLE_ORDER`], if the
/// constructed group does not induce `phi`, or if the order histogram does
/// not single out exactly one candidate.
pub fn brute_force_extension_oracle(b: &FinAbGroup, phi: &Z2Functional) -> Result<FinAbGroup> {
    if phi.base() != b {
        return Err(Error::GroupMismatch);
    }
    let order = b
        .order()
        .and_then(|o| o.to_usize())
        .filter(|&o| o <= MAX_ORACLE_ORDER)
        .ok_or_else(|| Error::Oracle(format!("base group {b} is not finite of order <= {MAX_ORACLE_ORDER}")))?;

    let radices: Vec<usize> = b.torsion().iter().map(|d| d.to_usize().unwrap()).collect();
    let mut bits = phi.bits().iter();
    let carries: Vec<bool> = radices
        .iter()
        .map(|d| d % 2 == 0 && *bits.next().unwrap())
        .collect();
    let ext = Extension { radices, carries };

    // The induced functional: 2 * lift(x) = (0, phi(x)) for every x with 2x = 0.
    for x in b.elements() {
        let coords: Vec<usize> = x.coords().iter().map(|c| c.to_usize().unwrap()).collect();
        let lift = (coords.clone(), false);
        let doubled_in_b = coords.iter().zip(&ext.radices).all(|(&c, &d)| (2 * c) % d == 0);
        if !doubled_in_b {
            continue;
        }
        let twice = ext.add(&lift, &lift);
        if twice.0.iter().any(|&c| c != 0) {
            return Err(Error::Oracle(format!("2 * lift({x:?}) leaves the kernel")));
        }
        if twice.1 != phi.eval(&x)? {
            return Err(Error::Oracle(format!("induced functional disagrees at {x:?}")));
        }
    }

    let mut hist: BTreeMap<Int, usize> = BTreeMap::new();
    for e in ext.elements() {
        *hist.entry(Int::from(ext.order(&e))).or_insert(0) += 1;
    }
    let total = Int::from(2 * order);
    let matches: Vec<FinAbGroup> = abelian_groups_of_order(&total)
        .into_iter()
        .filter(|g| order_profile(g) == hist)
        .collect();
    match matches.as_slice() {
        [g] => Ok(g.clone()),
        [] => Err(Error::Oracle(format!("no abelian group of order {total} matches"))),
        _ => Err(Error::Oracle(format!(
            "{} non-isomorphic groups of order {total} match",
            matches.len()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn f(d: &[i64], bits: &[bool]) -> (FinAbGroup, Z2Functional) {
        let b = FinAbGroup::from_parts(d, 0);
        let phi = Z2Functional::new(b.clone(), bits.to_vec()).unwrap();
        (b, phi)
    }

    #[test]
    fn groups_of_order() {
        assert_eq!(abelian_groups_of_order(&Int::from(8)).len(), 3);
        assert_eq!(abelian_groups_of_order(&Int::from(16)).len(), 5);
        assert_eq!(abelian_groups_of_order(&Int::from(72)).len(), 6);
        assert_eq!(abelian_groups_of_order(&Int::from(1)), vec![FinAbGroup::trivial()]);
    }

    #[test]
    fn z2_with_bit_is_z4() {
        let (b, phi) = f(&[2], &[true]);
        assert_eq!(brute_force_extension_oracle(&b, &phi).unwrap(), FinAbGroup::from_parts(&[4], 0));
        let (b, phi) = f(&[2], &[false]);
        assert_eq!(brute_force_extension_oracle(&b, &phi).unwrap(), FinAbGroup::from_parts(&[2, 2], 0));
    }

    #[test]
    fn odd_order_splits() {
        let (b, phi) = f(&[3], &[]);
        assert_eq!(brute_force_extension_oracle(&b, &phi).unwrap(), FinAbGroup::from_parts(&[6], 0));
    }

    #[test]
    fn z4_with_bit_is_z8() {
        let (b, phi) = f(&[4], &[true]);
        assert_eq!(brute_force_extension_oracle(&b, &phi).unwrap(), FinAbGroup::from_parts(&[8], 0));
    }

    #[test]
    fn rejects_large_or_infinite() {
        let b = FinAbGroup::from_parts(&[2], 1);
        assert!(brute_force_extension_oracle(&b, &Z2Functional::zero(b.clone())).is_err());
        let b = FinAbGroup::from_parts(&[512], 0);
        assert!(brute_force_extension_oracle(&b, &Z2Functional::zero(b.clone())).is_err());
    }
}
