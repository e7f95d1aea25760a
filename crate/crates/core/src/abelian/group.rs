use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::int::Int;

/// A finitely generated abelian group `Z_{d_1} + ... + Z_{d_t} + Z^r` in
/// invariant-factor form: every `d_i >= 2` and `d_i | d_{i+1}`.
///
/// The normal form is canonical, so derived `PartialEq` is group isomorphism.
/// Generators are ordered torsion first, then free.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FinAbGroup {
    torsion: Vec<Int>,
    free_rank: usize,
}

impl FinAbGroup {
    /// Checked constructor.
    pub fn new(torsion: Vec<Int>, free_rank: usize) -> Result<Self> {
        for (i, d) in torsion.iter().enumerate() {
            if *d < Int::from(2) {
                return Err(Error::InvalidGroup("invariant factors must be at least 2"));
            }
            if i > 0 && !torsion[i - 1].divides(d) {
                return Err(Error::InvalidGroup("invariant factors must form a divisibility chain"));
            }
        }
        Ok(FinAbGroup { torsion, free_rank })
    }

    /// Convenience constructor for small literals; panics if not in normal form.
    pub fn from_parts(torsion: &[i64], free_rank: usize) -> Self {
        Self::new(torsion.iter().map(|&d| Int::from(d)).collect(), free_rank)
            .expect("torsion list is not an invariant-factor chain")
    }

    pub fn trivial() -> Self {
        FinAbGroup::default()
    }

    pub fn free(rank: usize) -> Self {
        FinAbGroup {
            torsion: Vec::new(),
            free_rank: rank,
        }
    }

    /// Normal form of a direct sum of cyclic groups `Z_{n_i}` (`n_i = 0` meaning `Z`).
    ///
    /// Does not need factorization: each pair of adjacent entries is replaced
    /// by `(gcd, lcm)` until the list is a chain.
    pub fn from_cyclic_orders(orders: &[Int]) -> Self {
        let mut free_rank = 0;
        let mut finite: Vec<Int> = Vec::new();
        for n in orders {
            let n = n.abs();
            if n.is_zero() {
                free_rank += 1;
            } else if !n.is_one() {
                finite.push(n);
            }
        }
        // Bubble gcd/lcm until the chain condition holds.
        let len = finite.len();
        for i in 0..len {
            for j in i + 1..len {
                let (a, b) = (finite[i].clone(), finite[j].clone());
                let g = a.gcd(&b);
                finite[j] = a.lcm(&b);
                finite[i] = g;
            }
        }
        finite.retain(|d| !d.is_one());
        FinAbGroup {
            torsion: finite,
            free_rank,
        }
    }

    pub fn torsion(&self) -> &[Int] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion_len(&self) -> usize {
        self.torsion.len()
    }

    /// Number of generators (`t + r`).
    pub fn num_generators(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.torsion.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> Int {
        self.torsion.iter().cloned().product()
    }

    /// Order of the group, `None` if infinite.
    pub fn order(&self) -> Option<Int> {
        self.is_finite().then(|| self.torsion_order())
    }

    /// Order of generator `i`; zero stands for infinite order.
    pub fn generator_order(&self, i: usize) -> Int {
        self.torsion.get(i).cloned().unwrap_or(Int::ZERO)
    }

    /// Indices of the even invariant factors (the `Tor_2` generators).
    pub fn even_factor_indices(&self) -> Vec<usize> {
        (0..self.torsion.len())
            .filter(|&i| self.torsion[i].is_even())
            .collect()
    }

    pub fn direct_sum(&self, other: &FinAbGroup) -> FinAbGroup {
        let orders: Vec<Int> = self
            .torsion
            .iter()
            .chain(&other.torsion)
            .cloned()
            .chain(core::iter::repeat_n(Int::ZERO, self.free_rank + other.free_rank))
            .collect();
        FinAbGroup::from_cyclic_orders(&orders)
    }

    /// Splits each invariant factor as `2^k * m` with `m` odd; returns the
    /// exponents `k_i` and the odd parts `m_i`, index-aligned with `torsion()`.
    pub fn two_primary_split(&self) -> (Vec<u32>, Vec<Int>) {
        let two = Int::from(2);
        self.torsion
            .iter()
            .map(|d| {
                let mut k = 0;
                let mut m = d.clone();
                while m.is_even() {
                    m = m.exact_div(&two);
                    k += 1;
                }
                (k, m)
            })
            .unzip()
    }

    /// Primary decomposition of the torsion part as a list of `(p, k)`
    /// meaning `Z_{p^k}`, sorted by prime then exponent. Uses trial division.
    pub fn primary_decomposition(&self) -> Vec<(Int, u32)> {
        let mut out: Vec<(Int, u32)> = self
            .torsion
            .iter()
            .flat_map(factorize)
            .collect();
        out.sort();
        out
    }

    /// Reduces arbitrary integer coordinates into an element.
    pub fn element(&self, coords: Vec<Int>) -> Result<GroupElement> {
        if coords.len() != self.num_generators() {
            return Err(Error::DimensionMismatch {
                expected: self.num_generators(),
                found: coords.len(),
            });
        }
        Ok(self.reduce(coords))
    }

    pub fn element_from_i64(&self, coords: &[i64]) -> Result<GroupElement> {
        self.element(coords.iter().map(|&c| Int::from(c)).collect())
    }

    fn reduce(&self, mut coords: Vec<Int>) -> GroupElement {
        for (c, d) in coords.iter_mut().zip(&self.torsion) {
            *c = c.rem_euclid(d);
        }
        GroupElement { coords }
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            coords: alloc::vec![Int::ZERO; self.num_generators()],
        }
    }

    /// The `i`-th canonical generator.
    pub fn generator(&self, i: usize) -> GroupElement {
        let mut e = self.zero();
        e.coords[i] = Int::ONE;
        self.reduce(e.coords)
    }

    pub fn contains(&self, x: &GroupElement) -> bool {
        x.coords.len() == self.num_generators()
            && x.coords
                .iter()
                .zip(&self.torsion)
                .all(|(c, d)| !c.is_negative() && c < d)
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.reduce(a.coords.iter().zip(&b.coords).map(|(x, y)| x + y).collect())
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        self.reduce(a.coords.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, a: &GroupElement, c: &Int) -> GroupElement {
        self.reduce(a.coords.iter().map(|x| x * c).collect())
    }

    /// Integer combination `sum c_i x_i`.
    pub fn combine<'a>(
        &self,
        terms: impl IntoIterator<Item = (&'a Int, &'a GroupElement)>,
    ) -> GroupElement {
        let mut acc = alloc::vec![Int::ZERO; self.num_generators()];
        for (c, x) in terms {
            if c.is_zero() {
                continue;
            }
            for (a, xi) in acc.iter_mut().zip(&x.coords) {
                *a += &(c * xi);
            }
        }
        self.reduce(acc)
    }

    /// Order of an element; zero for infinite order.
    pub fn element_order(&self, x: &GroupElement) -> Int {
        if x.free_coords(self).iter().any(|c| !c.is_zero()) {
            return Int::ZERO;
        }
        x.coords
            .iter()
            .zip(&self.torsion)
            .fold(Int::ONE, |acc, (c, d)| acc.lcm(&d.exact_div(&c.gcd(d))))
    }

    /// Every element of a finite group, in lexicographic coordinate order.
    /// Panics if the group is infinite.
    pub fn elements(&self) -> Vec<GroupElement> {
        assert!(self.is_finite(), "cannot enumerate an infinite group");
        let sizes: Vec<usize> = self
            .torsion
            .iter()
            .map(|d| d.to_usize().expect("group too large to enumerate"))
            .collect();
        let total: usize = sizes.iter().product();
        let mut out = Vec::with_capacity(total);
        let mut idx = alloc::vec![0usize; sizes.len()];
        for _ in 0..total {
            out.push(GroupElement {
                coords: idx.iter().map(|&i| Int::from(i)).collect(),
            });
            for k in (0..sizes.len()).rev() {
                idx[k] += 1;
                if idx[k] < sizes[k] {
                    break;
                }
                idx[k] = 0;
            }
        }
        out
    }
}

fn factorize(n: &Int) -> Vec<(Int, u32)> {
    let mut out = Vec::new();
    let mut n = n.clone();
    let mut p = Int::from(2);
    while &p * &p <= n {
        let mut k = 0;
        while p.divides(&n) {
            n = n.exact_div(&p);
            k += 1;
        }
        if k > 0 {
            out.push((p.clone(), k));
        }
        p = p + Int::ONE;
    }
    if n > Int::ONE {
        out.push((n, 1));
    }
    out
}

fn subscript(n: &Int) -> alloc::string::String {
    alloc::format!("{n}")
        .chars()
        .map(|c| match c {
            '0'..='9' => char::from_u32('₀' as u32 + (c as u32 - '0' as u32)).unwrap(),
            other => other,
        })
        .collect()
}

/// Renders as e.g. `ℤ₂ ⊕ ℤ₄ ⊕ ℤ`, or `0` for the trivial group.
impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return f.write_str("0");
        }
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| {
            if !core::mem::replace(&mut first, false) {
                f.write_str(" ⊕ ")
            } else {
                Ok(())
            }
        };
        for d in &self.torsion {
            sep(f)?;
            write!(f, "ℤ{}", subscript(d))?;
        }
        for _ in 0..self.free_rank {
            sep(f)?;
            f.write_str("ℤ")?;
        }
        Ok(())
    }
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinAbGroup({self})")
    }
}

/// Coordinates of an element: torsion coordinates reduced into `[0, d_i)`,
/// then free coordinates. Only meaningful together with its group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GroupElement {
    coords: Vec<Int>,
}

impl GroupElement {
    pub fn coords(&self) -> &[Int] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<Int> {
        self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Int::is_zero)
    }

    pub fn torsion_coords<'a>(&'a self, group: &FinAbGroup) -> &'a [Int] {
        &self.coords[..group.torsion_len()]
    }

    pub fn free_coords<'a>(&'a self, group: &FinAbGroup) -> &'a [Int] {
        &self.coords[group.torsion_len()..]
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normal_form_from_cyclic_orders() {
        let g = FinAbGroup::from_cyclic_orders(&[Int::from(4), Int::from(3), Int::ZERO]);
        assert_eq!(g, FinAbGroup::from_parts(&[12], 1));
        let g = FinAbGroup::from_cyclic_orders(&[Int::from(6), Int::from(4), Int::from(1)]);
        assert_eq!(g, FinAbGroup::from_parts(&[2, 12], 0));
        let g = FinAbGroup::from_cyclic_orders(&[Int::from(2), Int::from(4), Int::from(2)]);
        assert_eq!(g, FinAbGroup::from_parts(&[2, 2, 4], 0));
    }

    #[test]
    fn rejects_broken_chain() {
        assert!(FinAbGroup::new(alloc::vec![Int::from(4), Int::from(2)], 0).is_err());
        assert!(FinAbGroup::new(alloc::vec![Int::from(1)], 0).is_err());
    }

    #[test]
    fn element_reduction_and_order() {
        let g = FinAbGroup::from_parts(&[2, 4], 1);
        let x = g.element_from_i64(&[3, -1, 0]).unwrap();
        assert_eq!(x.coords(), [Int::from(1), Int::from(3), Int::from(0)]);
        assert_eq!(g.element_order(&x), Int::from(4));
        assert!(g.element_order(&g.generator(2)).is_zero());
        assert!(g.element_from_i64(&[1, 2]).is_err());
    }

    #[test]
    fn primary_views() {
        let g = FinAbGroup::from_parts(&[2, 12], 0);
        assert_eq!(
            g.primary_decomposition(),
            [(Int::from(2), 1), (Int::from(2), 2), (Int::from(3), 1)]
        );
        let (k, m) = g.two_primary_split();
        assert_eq!(k, [1, 2]);
        assert_eq!(m, [Int::from(1), Int::from(3)]);
    }

    #[test]
    fn display() {
        assert_eq!(alloc::format!("{}", FinAbGroup::from_parts(&[2, 12], 1)), "ℤ₂ ⊕ ℤ₁₂ ⊕ ℤ");
        assert_eq!(alloc::format!("{}", FinAbGroup::trivial()), "0");
    }

    #[test]
    fn enumerate_elements() {
        let g = FinAbGroup::from_parts(&[2, 4], 0);
        let all = g.elements();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|x| g.contains(x)));
    }
}
