#![allow(dead_code)]

use cohomotopy_core::abelian::{FinAbGroup, GroupElement};
use cohomotopy_core::extension::Z2Functional;
use cohomotopy_core::manifold::ManifoldData;
use cohomotopy_core::{Int, IntMatrix};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn group(torsion: &[i64], free: usize) -> FinAbGroup {
    FinAbGroup::from_parts(torsion, free)
}

/// Random element of `SL_n(Z)` up to sign, as a product of elementary moves.
pub fn random_unimodular<R: Rng>(rng: &mut R, n: usize, steps: usize) -> IntMatrix {
    let mut p = IntMatrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            p.negate_row(0);
        }
        return p;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        match rng.gen_range(0..4) {
            0 => p.swap_rows(i, j),
            1 => p.negate_row(i),
            _ => p.add_row_multiple(i, j, &Int::from(rng.gen_range(-2i64..=2))),
        }
    }
    p
}

/// A random unimodular symmetric form of rank `n`, even with probability `p_even`
/// when `n` is even.
pub fn random_form<R: Rng>(rng: &mut R, n: usize, p_even: f64) -> IntMatrix {
    let even = n.is_multiple_of(2) && rng.gen_bool(p_even);
    let mut base = IntMatrix::zeros(n, n);
    if even {
        for k in 0..n / 2 {
            base[(2 * k, 2 * k + 1)] = Int::ONE;
            base[(2 * k + 1, 2 * k)] = Int::ONE;
        }
    } else {
        for k in 0..n {
            base[(k, k)] = Int::from(if rng.gen_bool(0.5) { 1 } else { -1 });
        }
    }
    let p = random_unimodular(rng, n, 6);
    p.transpose().mul(&base).mul(&p)
}

/// Random invariant factors with product at most `max_order`.
pub fn random_torsion<R: Rng>(rng: &mut R, max_order: i64) -> Vec<i64> {
    let mut orders = Vec::new();
    let mut total = 1;
    for _ in 0..rng.gen_range(0..=3) {
        let d = *[2i64, 2, 3, 4, 4, 5, 6, 8].choose(rng).unwrap();
        if total * d <= max_order {
            total *= d;
            orders.push(Int::from(d));
        }
    }
    FinAbGroup::from_cyclic_orders(&orders)
        .torsion()
        .iter()
        .map(|d| d.to_i64().unwrap())
        .collect()
}

/// Random element of `g` killed by `order` (any element when `order` is 0),
/// with free coordinates in `[-2, 2]`.
pub fn random_element_killed_by<R: Rng>(rng: &mut R, g: &FinAbGroup, order: &Int) -> GroupElement {
    let mut coords = Vec::new();
    for d in g.torsion() {
        let step = if order.is_zero() {
            Int::ONE
        } else {
            d.exact_div(&d.gcd(order))
        };
        let choices = d.exact_div(&step).to_i64().unwrap();
        coords.push(&step * &Int::from(rng.gen_range(0..choices)));
    }
    for _ in 0..g.free_rank() {
        coords.push(if order.is_zero() {
            Int::from(rng.gen_range(-2i64..=2))
        } else {
            Int::ZERO
        });
    }
    g.element(coords).unwrap()
}

/// Random valid homology data: torsion order at most 64, `b1 <= 3`, `b2 <= 4`.
pub fn random_manifold<R: Rng>(rng: &mut R) -> ManifoldData {
    let torsion = random_torsion(rng, 64);
    let b1 = rng.gen_range(0..=3);
    let b2 = rng.gen_range(0..=4);
    let h1 = group(&torsion, b1);
    let h2 = group(&torsion, b2);
    let q = random_form(rng, b2, 0.6);
    let mut x = ManifoldData::with_zero_pairings(h1.clone(), h2.clone(), b1, q);
    for i in 0..h2.num_generators() {
        let order = h2.generator_order(i);
        for j in 0..b1 {
            x.mu[i][j] = random_element_killed_by(rng, &h1, &order);
        }
    }
    let bits = (0..h1.even_factor_indices().len()).map(|_| rng.gen_bool(0.6)).collect();
    x.w = Z2Functional::new(h1, bits).unwrap();
    assert!(x.validate().is_empty(), "{:?}", x.validate());
    x
}

/// Every abelian 2-group of order at most `max_order`.
pub fn two_groups_up_to(max_order: u32) -> Vec<FinAbGroup> {
    fn partitions(n: u32, max: u32) -> Vec<Vec<u32>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in 1..=n.min(max) {
            for mut rest in partitions(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    let mut out = Vec::new();
    let mut e = 1;
    while 1u32 << e <= max_order {
        for part in partitions(e, e) {
            let mut orders: Vec<i64> = part.iter().map(|&k| 1i64 << k).collect();
            orders.sort();
            out.push(group(&orders, 0));
        }
        e += 1;
    }
    out
}

/// Every functional on a group with `n` even factors.
pub fn all_bit_vectors(n: usize) -> Vec<Vec<bool>> {
    (0..1u32 << n)
        .map(|m| (0..n).map(|k| m >> k & 1 == 1).collect())
        .collect()
}
