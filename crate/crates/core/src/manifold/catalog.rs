//! Constructors for standard examples, and lookup by name.

use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use super::{DirectSum, ManifoldData, ThreeManifoldData};
use crate::abelian::FinAbGroup;
use crate::error::{Error, Result};
use crate::extension::Z2Functional;
use crate::int::Int;
use crate::matrix::IntMatrix;

/// The boundary of `S^1 x B^4` plus one 2-handle linking the 1-handle `n`
/// times with framing `k`.
///
/// `H_2 = Z_n` is generated by the 2-handle; duality then forces
/// `H_1 = Z_n`, and `H_3 = 0`. For even `n` the single `Tor_2` class is the
/// core of the Möbius band bounded by the attaching circle, and `w` on it is
/// the framing parity `k`. For odd `n` the framing does not matter, so only
/// `k = 0` is accepted.
pub fn e_nk(n: u32, k: u32) -> Result<ManifoldData> {
    if n < 2 {
        return Err(Error::InvalidParameter("E_{n,k} needs n >= 2".to_string()));
    }
    if k > 1 {
        return Err(Error::InvalidParameter("E_{n,k} takes k in {0, 1}".to_string()));
    }
    if k == 1 && n % 2 == 1 {
        return Err(Error::InvalidParameter(
            "E_{n,1} with odd n is E_{n,0}; use k = 0".to_string(),
        ));
    }
    let zn = FinAbGroup::from_parts(&[n as i64], 0);
    let mut x = ManifoldData::with_zero_pairings(zn.clone(), zn.clone(), 0, IntMatrix::zeros(0, 0));
    let bits = if n.is_multiple_of(2) { vec![k == 1] } else { vec![] };
    x.w = Z2Functional::new(zn, bits)?;
    Ok(x)
}

/// Homology of a simply connected manifold with intersection form `q`.
pub fn simply_connected(q: IntMatrix) -> Result<ManifoldData> {
    if !q.is_symmetric() {
        return Err(Error::InvalidParameter("intersection form must be symmetric".to_string()));
    }
    if q.rows() > 0 && q.determinant().abs() != Int::ONE {
        return Err(Error::InvalidParameter("intersection form must be unimodular".to_string()));
    }
    let n = q.rows();
    Ok(ManifoldData::with_zero_pairings(
        FinAbGroup::trivial(),
        FinAbGroup::free(n),
        0,
        q,
    ))
}

/// `Y x S^1` via the Künneth decomposition.
///
/// `H_1 = H_1(Y) + Z`, `H_2 = H_2(Y) + H_1(Y)` with free generators ordered
/// `beta_1..beta_b` then the free `gamma`s, and `H_3 = Z[Y] + H_2(Y)`.
/// Intersection with `alpha = (beta, gamma)` sends `[Y]` to `(gamma, 0)` and
/// `delta` in `H_2(Y)` to `(delta . beta, delta . gamma)`. The result is spin.
pub fn product_with_circle(y: &ThreeManifoldData) -> Result<ManifoldData> {
    let violations = y.validate();
    if !violations.is_empty() {
        return Err(Error::Invalid(violations));
    }
    let b = y.b1();
    let t = y.h1y.torsion_len();
    let h1 = FinAbGroup::new(y.h1y.torsion().to_vec(), b + 1)?;
    let h2 = FinAbGroup::new(y.h1y.torsion().to_vec(), 2 * b)?;
    let h3_rank = 1 + b;

    let q = IntMatrix::from_fn(2 * b, 2 * b, |i, j| match (i < b, j < b) {
        (true, false) => y.pairing21[(i, j - b)].clone(),
        (false, true) => y.pairing21[(j, i - b)].clone(),
        _ => Int::ZERO,
    });

    // H_1(Y) element, embedded with a zero last coordinate
    let lift = |x: &[Int], last: Int| {
        let mut c = x.to_vec();
        c.push(last);
        h1.element(c).expect("length matches")
    };
    let zero_y = y.h1y.zero();
    let mut mu = Vec::with_capacity(h2.num_generators());
    // torsion gamma generators
    for i in 0..t {
        let mut row = vec![lift(y.h1y.generator(i).coords(), Int::ZERO)];
        row.extend((0..b).map(|_| h1.zero()));
        mu.push(row);
    }
    // beta generators
    for j in 0..b {
        let mut row = vec![h1.zero()];
        row.extend((0..b).map(|k| lift(y.pairing22[k][j].coords(), Int::ZERO)));
        mu.push(row);
    }
    // free gamma generators
    for j in 0..b {
        let mut row = vec![lift(y.h1y.generator(t + j).coords(), Int::ZERO)];
        row.extend((0..b).map(|k| lift(zero_y.coords(), y.pairing21[(k, j)].clone())));
        mu.push(row);
    }

    let w = Z2Functional::zero(h1.clone());
    Ok(ManifoldData {
        h1,
        h2,
        h3_rank,
        q,
        mu,
        w,
    })
}

/// Homology of `A # B`.
///
/// Torsion is renormalized to invariant factors; free generators keep their
/// order (those of `A`, then those of `B`), so `q` is block diagonal. The
/// pairing and `w` are transported through the renormalization.
pub fn connected_sum(a: &ManifoldData, b: &ManifoldData) -> ManifoldData {
    let s1 = DirectSum::new(&a.h1, &b.h1);
    let s2 = DirectSum::new(&a.h2, &b.h2);
    let h1 = s1.group.clone();
    let h2 = s2.group.clone();

    let mu = (0..h2.num_generators())
        .map(|g| {
            let (ga, gb) = s2.split_generator(g);
            let left = (0..a.h3_rank).map(|j| s1.embed_left(&a.pair(&ga, j)));
            let right = (0..b.h3_rank).map(|j| s1.embed_right(&b.pair(&gb, j)));
            left.chain(right).collect()
        })
        .collect();

    let two = Int::from(2);
    let bits = h1
        .even_factor_indices()
        .into_iter()
        .map(|i| {
            let half = h1.torsion()[i].exact_div(&two);
            let (xa, xb) = s1.split_scaled_generator(i, &half);
            let va = a.w.eval(&xa).expect("component of a 2-torsion class");
            let vb = b.w.eval(&xb).expect("component of a 2-torsion class");
            va ^ vb
        })
        .collect();
    let w = Z2Functional::new(h1.clone(), bits).expect("one bit per even factor");

    ManifoldData {
        h1,
        h2,
        h3_rank: a.h3_rank + b.h3_rank,
        q: a.q.block_sum(&b.q),
        mu,
        w,
    }
}

/// The type III₁ example: `E_{2,1} # (T^2 x S^2)` surgered along `C # J`.
///
/// `H_1 = Z_2 + Z` (`kappa_1`, `kappa_2`), `H_2 = Z_2 + Z^2` (`alpha_1` the
/// fiber of `E_{2,1}`, `alpha_2 = T^2 x pt`, `alpha_3 = pt x S^2`),
/// `H_3 = Z` (`tau = J x S^2`). Only `alpha_2 . alpha_3 = 1` and
/// `alpha_2 . tau = kappa_1` are nonzero, and `w(kappa_1) = 1`.
pub fn surgered_example() -> ManifoldData {
    let h1 = FinAbGroup::from_parts(&[2], 1);
    let h2 = FinAbGroup::from_parts(&[2], 2);
    let q = IntMatrix::from_rows([[0, 1], [1, 0]]);
    let mut x = ManifoldData::with_zero_pairings(h1.clone(), h2, 1, q);
    x.mu[1][0] = h1.generator(0);
    x.w = Z2Functional::new(h1, vec![true]).expect("one even factor");
    x
}

/// `L(p, q)`: `H_1 = Z_p`, `b_1 = 0`.
pub fn lens_space_y(p: u32, q: u32) -> Result<ThreeManifoldData> {
    if p == 0 {
        return Err(Error::InvalidParameter("lens space needs p >= 1".to_string()));
    }
    if Int::from(p as i64).gcd(&Int::from(q as i64)) != Int::ONE {
        return Err(Error::InvalidParameter("lens space needs gcd(p, q) = 1".to_string()));
    }
    let torsion: &[i64] = if p == 1 { &[] } else { &[p as i64] };
    Ok(ThreeManifoldData {
        h1y: FinAbGroup::from_parts(torsion, 0),
        pairing22: Vec::new(),
        pairing21: IntMatrix::zeros(0, 0),
    })
}

/// `S^2 x S^1`: `H_1 = Z`, the sphere meets the circle once.
pub fn s2xs1_y() -> ThreeManifoldData {
    let h1y = FinAbGroup::free(1);
    ThreeManifoldData {
        pairing22: vec![vec![h1y.zero()]],
        pairing21: IntMatrix::identity(1),
        h1y,
    }
}

/// `T^3` with `H_2` basis `beta_23, beta_31, beta_12` dual to the circles
/// `gamma_1, gamma_2, gamma_3`; two coordinate tori meet in the third circle.
pub fn three_torus_y() -> ThreeManifoldData {
    let h1y = FinAbGroup::free(3);
    let g = |c: [i64; 3]| h1y.element_from_i64(&c).expect("three coordinates");
    let pairing22 = vec![
        vec![g([0, 0, 0]), g([0, 0, 1]), g([0, -1, 0])],
        vec![g([0, 0, -1]), g([0, 0, 0]), g([1, 0, 0])],
        vec![g([0, 1, 0]), g([-1, 0, 0]), g([0, 0, 0])],
    ];
    ThreeManifoldData {
        h1y,
        pairing22,
        pairing21: IntMatrix::identity(3),
    }
}

pub fn s4() -> ManifoldData {
    simply_connected(IntMatrix::zeros(0, 0)).expect("empty form")
}

pub fn cp2() -> ManifoldData {
    simply_connected(IntMatrix::identity(1)).expect("unimodular")
}

pub fn cp2bar() -> ManifoldData {
    simply_connected(IntMatrix::from_rows([[-1]])).expect("unimodular")
}

pub fn s2xs2() -> ManifoldData {
    simply_connected(IntMatrix::from_rows([[0, 1], [1, 0]])).expect("unimodular")
}

/// The negative definite `E_8` lattice (Cartan matrix with signs flipped),
/// as realized by a homotopy 4-manifold.
pub fn e8() -> ManifoldData {
    let mut q = IntMatrix::zeros(8, 8);
    // Dynkin diagram: chain 0-1-2-3-4-5-6 with node 7 attached to node 4
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (4, 7)];
    for i in 0..8 {
        q[(i, i)] = Int::from(-2);
    }
    for (a, b) in edges {
        q[(a, b)] = Int::ONE;
        q[(b, a)] = Int::ONE;
    }
    simply_connected(q).expect("E8 is unimodular")
}

pub fn s2xt2() -> ManifoldData {
    product_with_circle(&s2xs1_y()).expect("valid three-manifold")
}

pub fn t4() -> ManifoldData {
    product_with_circle(&three_torus_y()).expect("valid three-manifold")
}

pub fn lens_times_circle(p: u32, q: u32) -> Result<ManifoldData> {
    product_with_circle(&lens_space_y(p, q)?)
}

/// One row of the catalog roster.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub description: &'static str,
}

pub const ROSTER: &[CatalogEntry] = &[
    CatalogEntry { name: "s4", description: "the 4-sphere" },
    CatalogEntry { name: "cp2", description: "complex projective plane" },
    CatalogEntry { name: "cp2bar", description: "CP^2 with reversed orientation" },
    CatalogEntry { name: "s2xs2", description: "S^2 x S^2 (hyperbolic form)" },
    CatalogEntry { name: "e8", description: "simply connected, negative definite E8 form" },
    CatalogEntry { name: "e_n_k", description: "E_{n,k}: H_1 = H_2 = Z_n, k in {0,1} (k = 1 needs n even)" },
    CatalogEntry { name: "lens:p,q", description: "L(p,q) x S^1" },
    CatalogEntry { name: "s2xt2", description: "S^2 x T^2 = (S^2 x S^1) x S^1" },
    CatalogEntry { name: "t4", description: "the 4-torus T^3 x S^1" },
    CatalogEntry { name: "example3", description: "type III_1 surgery on E_{2,1} # (T^2 x S^2)" },
];

fn parse_u32(s: &str, name: &str) -> Result<u32> {
    s.trim()
        .parse()
        .map_err(|_| Error::UnknownCatalogName(name.to_string()))
}

/// Resolves a catalog name. Names joined by `#` denote connected sums.
pub fn lookup(name: &str) -> Result<ManifoldData> {
    if name.contains('#') {
        let mut parts = name.split('#');
        let first = lookup(parts.next().unwrap_or_default())?;
        return parts.try_fold(first, |acc, p| Ok(connected_sum(&acc, &lookup(p)?)));
    }
    let unknown = || Error::UnknownCatalogName(name.to_string());
    let name = name.trim();
    match name {
        "s4" => Ok(s4()),
        "cp2" => Ok(cp2()),
        "cp2bar" => Ok(cp2bar()),
        "s2xs2" => Ok(s2xs2()),
        "e8" => Ok(e8()),
        "s2xt2" => Ok(s2xt2()),
        "t4" => Ok(t4()),
        "example3" => Ok(surgered_example()),
        _ => {
            if let Some(rest) = name.strip_prefix("lens:") {
                let (p, q) = rest.split_once(',').ok_or_else(unknown)?;
                return lens_times_circle(parse_u32(p, name)?, parse_u32(q, name)?);
            }
            if let Some(rest) = name.strip_prefix("e_") {
                let (n, k) = rest.split_once('_').ok_or_else(unknown)?;
                return e_nk(parse_u32(n, name)?, parse_u32(k, name)?);
            }
            Err(unknown())
        }
    }
}

/// Names of the fixed (non-parametric) entries plus templates.
pub fn roster_names() -> Vec<String> {
    ROSTER.iter().map(|e| e.name.to_string()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_validates() {
        let all = [
            s4(),
            cp2(),
            cp2bar(),
            s2xs2(),
            e8(),
            s2xt2(),
            t4(),
            surgered_example(),
            e_nk(2, 1).unwrap(),
            e_nk(2, 0).unwrap(),
            e_nk(3, 0).unwrap(),
            lens_times_circle(4, 1).unwrap(),
            lens_times_circle(1, 0).unwrap(),
            connected_sum(&cp2(), &cp2bar()),
            connected_sum(&e_nk(4, 1).unwrap(), &e_nk(3, 0).unwrap()),
        ];
        for x in all {
            assert!(x.validate().is_empty(), "{:?}", x.validate());
        }
    }

    #[test]
    fn e_nk_cases() {
        let e = e_nk(2, 1).unwrap();
        assert_eq!(e.h1, FinAbGroup::from_parts(&[2], 0));
        assert_eq!(e.w.bits(), [true]);
        assert_eq!(e_nk(2, 0).unwrap().w.bits(), [false]);
        assert!(e_nk(3, 0).unwrap().w.bits().is_empty());
        assert!(e_nk(3, 1).is_err());
        assert!(e_nk(1, 0).is_err());
    }

    #[test]
    fn lens_product() {
        let x = lens_times_circle(5, 2).unwrap();
        assert_eq!(x.h1, FinAbGroup::from_parts(&[5], 1));
        assert_eq!(x.h2, FinAbGroup::from_parts(&[5], 0));
        assert_eq!(x.h3_rank, 1);
        let k = x.h2.generator(0);
        assert_eq!(x.pair(&x.h2.scale(&k, &Int::from(3)), 0), x.h1.element_from_i64(&[3, 0]).unwrap());
        assert!(lens_space_y(4, 2).is_err());
    }

    #[test]
    fn s2xt2_form() {
        let x = s2xt2();
        assert_eq!(x.h2, FinAbGroup::free(2));
        assert_eq!(x.q, IntMatrix::from_rows([[0, 1], [1, 0]]));
    }

    #[test]
    fn t4_shape() {
        let x = t4();
        assert_eq!(x.h1, FinAbGroup::free(4));
        assert_eq!(x.h2, FinAbGroup::free(6));
        assert_eq!(x.h3_rank, 4);
        // beta_23 . beta_31 = gamma_3, seen from H_3 generator delta = beta_23
        let beta31 = x.h2.generator(1);
        assert_eq!(x.pair(&beta31, 1), x.h1.element_from_i64(&[0, 0, 1, 0]).unwrap());
    }

    #[test]
    fn connected_sum_transports_w() {
        let x = connected_sum(&e_nk(4, 1).unwrap(), &e_nk(3, 0).unwrap());
        assert_eq!(x.h1, FinAbGroup::from_parts(&[12], 0));
        assert!(x.q.rows() == 0);
        assert_eq!(x.w.bits(), [true]);
    }

    #[test]
    fn connected_sum_identity_and_blocks() {
        let a = surgered_example();
        assert_eq!(connected_sum(&a, &s4()), a);
        assert_eq!(connected_sum(&s4(), &a), a);
        let x = connected_sum(&cp2(), &cp2bar());
        assert_eq!(x.q, IntMatrix::from_rows([[1, 0], [0, -1]]));
    }

    #[test]
    fn lookup_names() {
        assert_eq!(lookup("e_2_1").unwrap(), e_nk(2, 1).unwrap());
        assert_eq!(lookup("lens:4,1").unwrap(), lens_times_circle(4, 1).unwrap());
        assert_eq!(lookup("cp2#cp2bar").unwrap(), connected_sum(&cp2(), &cp2bar()));
        assert!(matches!(lookup("k3"), Err(Error::UnknownCatalogName(_))));
        assert!(matches!(lookup("e_3_1"), Err(Error::InvalidParameter(_))));
    }
}
