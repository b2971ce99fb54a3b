//! Non-symplectic involutions on K3 surfaces.
//!
//! An involution `iota` on a K3 surface `S` is described by the rank `r` of
//! the invariant lattice, its discriminant exponent `a`, and its fixed locus:
//! `N` disjoint curves of total genus `N'`. Away from the two special cases
//! (empty fixed locus, two elliptic curves) the fixed locus is one curve `C`
//! of genus `g` plus `k` rational curves, and
//!
//! ```text
//! k = (r - a)/2      g = (22 - r - a)/2
//! N = (2 + r - a)/2  N' = (22 - r - a)/2
//! r = 10 + N - N'    a = 12 - N - N'
//! ```

use crate::appendix::{self, APPENDIX};
use crate::error::{Error, Result};
use crate::hodge::SurfaceHodge;
use serde::Serialize;

/// Shape of the fixed locus of the involution on `S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Shape {
    /// No fixed points (Enriques quotient).
    Empty,
    /// Two disjoint elliptic curves.
    TwoElliptic,
    /// One curve of genus `g` and `k` rational curves.
    General,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NikulinInvariants {
    pub r: u32,
    pub a: u32,
    #[serde(rename = "N")]
    pub n: u32,
    #[serde(rename = "Nprime")]
    pub nprime: u32,
    /// Genus of the highest-genus fixed curve (0 if none).
    pub g: u32,
    /// Number of rational fixed curves besides the highest-genus one.
    pub k: u32,
    pub shape: Shape,
}

fn check_inequalities(n: i64, nprime: i64) -> Result<()> {
    let out = || Error::OutOfRange { n, nprime };
    if n < 0 || nprime < 0 {
        return Err(out());
    }
    if n == 0 {
        return if nprime == 0 { Ok(()) } else { Err(out()) };
    }
    let r = 10 + n - nprime;
    let a = 12 - n - nprime;
    if !(1..=20).contains(&r) || a < 0 {
        return Err(out());
    }
    Ok(())
}

impl NikulinInvariants {
    pub const EMPTY: Self = Self { r: 10, a: 10, n: 0, nprime: 0, g: 0, k: 0, shape: Shape::Empty };

    /// Invariants from the fixed-locus pair. `(2, 2)` yields the `General`
    /// shape; use [`two_elliptic`](Self::two_elliptic) for the other one.
    pub fn from_nn(n: i64, nprime: i64) -> Result<Self> {
        check_inequalities(n, nprime)?;
        let (nu, npu) = (n as u32, nprime as u32);
        if appendix::lookup(nu, npu).is_none() {
            return Err(Error::Inadmissible { n, nprime });
        }
        if n == 0 {
            return Ok(Self::EMPTY);
        }
        Ok(Self {
            r: (10 + n - nprime) as u32,
            a: (12 - n - nprime) as u32,
            n: nu,
            nprime: npu,
            g: npu,
            k: nu - 1,
            shape: Shape::General,
        })
    }

    /// Fixed locus made of two elliptic curves: `(r, a, N, N') = (10, 8, 2, 2)`.
    pub const fn two_elliptic() -> Self {
        Self { r: 10, a: 8, n: 2, nprime: 2, g: 1, k: 0, shape: Shape::TwoElliptic }
    }

    /// Inverse of [`from_nn`](Self::from_nn). `empty_fixed_locus` only matters
    /// for `(r, a) = (10, 10)`, which is both the Enriques case and `(N, N') = (1, 1)`.
    pub fn from_ra(r: i64, a: i64, empty_fixed_locus: bool) -> Result<Self> {
        if (r - a).rem_euclid(2) != 0 {
            return Err(Error::Parity { r, a });
        }
        if empty_fixed_locus {
            return if (r, a) == (10, 10) {
                Ok(Self::EMPTY)
            } else {
                Err(Error::Unsupported("an empty fixed locus requires (r, a) = (10, 10)"))
            };
        }
        let n = (2 + r - a) / 2;
        let nprime = (22 - r - a) / 2;
        if n == 0 {
            // (N, N') = (0, 0) is reachable only through the empty flag.
            return Err(Error::OutOfRange { n, nprime });
        }
        Self::from_nn(n, nprime)
    }

    /// `t_{1,1}` of the natural involution on `S^[2]`: the invariant part of
    /// `H^2(S)` plus the exceptional divisor.
    pub fn t11_natural(&self) -> u32 {
        self.r + 1
    }

    /// Genera of the fixed curves on `S`.
    pub fn fixed_curves(&self) -> FixedCurveList {
        let genera = match self.shape {
            Shape::Empty => Vec::new(),
            Shape::TwoElliptic => vec![1, 1],
            Shape::General => std::iter::once(self.g).chain(std::iter::repeat_n(0, self.k as usize)).collect(),
        };
        FixedCurveList { genera }
    }

    /// All six relations between `(r, a, N, N', g, k)` for the general shape.
    pub fn relations_hold(&self) -> bool {
        let (r, a, n, np, g, k) = (
            i64::from(self.r),
            i64::from(self.a),
            i64::from(self.n),
            i64::from(self.nprime),
            i64::from(self.g),
            i64::from(self.k),
        );
        (r - a) % 2 == 0
            && 2 * k == r - a
            && 2 * g == 22 - r - a
            && 2 * n == 2 + r - a
            && 2 * np == 22 - r - a
            && r == 11 + k - g
            && r == 10 + n - np
            && a == 11 - k - g
            && a == 12 - n - np
            && n == k + 1
            && np == g
    }
}

/// Genera of the fixed curves, one entry per curve.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixedCurveList {
    pub genera: Vec<u32>,
}

impl FixedCurveList {
    pub fn count(&self) -> u32 {
        self.genera.len() as u32
    }

    pub fn total_genus(&self) -> u32 {
        self.genera.iter().sum()
    }
}

/// All admissible invariants, in printed table order (65 entries).
pub fn enumerate_admissible() -> Vec<NikulinInvariants> {
    APPENDIX
        .iter()
        .map(|row| {
            NikulinInvariants::from_nn(i64::from(row.n), i64::from(row.nprime)).expect("appendix rows are admissible")
        })
        .collect()
}

fn elliptic_curve_products() -> [SurfaceHodge; 2] {
    // Sym^2 E is a P^1-bundle over E; E x E' is an abelian surface.
    [SurfaceHodge::connected(1, 0, 2), SurfaceHodge::connected(2, 1, 4)]
}

/// Components of the fixed locus of the natural involution on `S^[2]`.
pub fn fixed_surfaces_on_hilb2(inv: &NikulinInvariants) -> Vec<SurfaceHodge> {
    let quotient = SurfaceHodge::connected(0, 0, inv.r);
    match inv.shape {
        Shape::Empty => vec![quotient],
        Shape::TwoElliptic => {
            let [sym2, product] = elliptic_curve_products();
            vec![sym2, sym2, product, quotient]
        }
        Shape::General => {
            let (g, k) = (inv.g, inv.k as usize);
            let c_hilb2 = SurfaceHodge::connected(g, g * g.saturating_sub(1) / 2, 1 + g * g);
            let c_times_line = SurfaceHodge::connected(g, 0, 2);
            let mut out = Vec::with_capacity(2 + 2 * k + k * k.saturating_sub(1) / 2);
            out.push(c_hilb2);
            out.extend(std::iter::repeat_n(c_times_line, k));
            out.extend(std::iter::repeat_n(SurfaceHodge::P2, k));
            out.extend(std::iter::repeat_n(SurfaceHodge::P1_X_P1, k * k.saturating_sub(1) / 2));
            out.push(quotient);
            out
        }
    }
}

/// Components of the fixed locus of `iota x iota` on `S x S`.
pub fn fixed_surfaces_on_sxs(inv: &NikulinInvariants) -> Vec<SurfaceHodge> {
    match inv.shape {
        Shape::Empty => Vec::new(),
        Shape::TwoElliptic => {
            let [_, product] = elliptic_curve_products();
            vec![product; 4]
        }
        Shape::General => {
            let (g, k) = (inv.g, inv.k as usize);
            let c_times_c = SurfaceHodge::connected(2 * g, g * g, 2 + 2 * g * g);
            let c_times_line = SurfaceHodge::connected(g, 0, 2);
            let mut out = vec![c_times_c];
            out.extend(std::iter::repeat_n(c_times_line, 2 * k));
            out.extend(std::iter::repeat_n(SurfaceHodge::P1_X_P1, k * k));
            out
        }
    }
}

pub fn t11_natural(inv: &NikulinInvariants) -> u32 {
    inv.t11_natural()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hodge::{sum_surface_hodge, FixedLocusHodge};

    #[test]
    fn from_nn_examples() {
        let i = NikulinInvariants::from_nn(1, 10).unwrap();
        assert_eq!((i.r, i.a, i.g, i.k), (1, 1, 10, 0));
        let i = NikulinInvariants::from_nn(10, 0).unwrap();
        assert_eq!((i.r, i.a, i.g, i.k), (20, 2, 0, 9));
        let i = NikulinInvariants::from_nn(0, 0).unwrap();
        assert_eq!((i.shape, i.r, i.a), (Shape::Empty, 10, 10));
        assert_eq!(NikulinInvariants::from_nn(2, 2).unwrap().shape, Shape::General);
    }

    #[test]
    fn from_nn_errors() {
        // r = 21 fails the inequalities; (3, 8) passes them but is not admissible.
        assert_eq!(NikulinInvariants::from_nn(11, 0), Err(Error::OutOfRange { n: 11, nprime: 0 }));
        assert_eq!(NikulinInvariants::from_nn(0, 3), Err(Error::OutOfRange { n: 0, nprime: 3 }));
        assert_eq!(NikulinInvariants::from_nn(-1, 0), Err(Error::OutOfRange { n: -1, nprime: 0 }));
        assert_eq!(NikulinInvariants::from_nn(1, 11), Err(Error::OutOfRange { n: 1, nprime: 11 }));
        assert_eq!(NikulinInvariants::from_nn(3, 8), Err(Error::Inadmissible { n: 3, nprime: 8 }));
        assert_eq!(NikulinInvariants::from_nn(10, 3), Err(Error::OutOfRange { n: 10, nprime: 3 }));
        assert_eq!(NikulinInvariants::from_nn(9, 3), Err(Error::Inadmissible { n: 9, nprime: 3 }));
    }

    #[test]
    fn from_ra_examples() {
        let i = NikulinInvariants::from_ra(10, 8, false).unwrap();
        assert_eq!((i.n, i.nprime), (2, 2));
        assert_eq!(NikulinInvariants::from_ra(10, 10, true).unwrap().shape, Shape::Empty);
        assert_eq!(NikulinInvariants::from_ra(11, 10, false), Err(Error::Parity { r: 11, a: 10 }));
        let i = NikulinInvariants::from_ra(10, 10, false).unwrap();
        assert_eq!((i.n, i.nprime, i.shape), (1, 1, Shape::General));
        assert!(NikulinInvariants::from_ra(12, 10, true).is_err());
    }

    #[test]
    fn enumerate() {
        let all = enumerate_admissible();
        assert_eq!(all.len(), 65);
        assert_eq!(all.iter().filter(|i| i.n >= 1).count(), 64);
        let has = |n, np| all.iter().any(|i| i.n == n && i.nprime == np);
        assert!(has(3, 7) && !has(3, 8));
        assert!(has(10, 2) && !has(10, 3));
        assert_eq!((all[0].n, all[0].nprime), (0, 0));
    }

    #[test]
    fn relations_on_every_general_row() {
        for inv in enumerate_admissible().iter().filter(|i| i.n >= 1) {
            assert!(inv.relations_hold(), "{inv:?}");
            let curves = inv.fixed_curves();
            assert_eq!((curves.count(), curves.total_genus()), (inv.n, inv.nprime));
        }
        let te = NikulinInvariants::two_elliptic().fixed_curves();
        assert_eq!((te.count(), te.total_genus()), (2, 2));
    }

    #[test]
    fn from_ra_inverts_from_nn() {
        for inv in enumerate_admissible() {
            let back = NikulinInvariants::from_ra(inv.r.into(), inv.a.into(), inv.shape == Shape::Empty).unwrap();
            assert_eq!(back, inv);
        }
    }

    #[test]
    fn hilb2_fixed_locus_examples() {
        let i = NikulinInvariants::from_nn(1, 10).unwrap();
        let s = fixed_surfaces_on_hilb2(&i);
        assert_eq!(s.len(), 2);
        assert_eq!(sum_surface_hodge(&s), FixedLocusHodge::new(2, 10, 45, 102));

        let s = fixed_surfaces_on_hilb2(&NikulinInvariants::EMPTY);
        assert_eq!(s, vec![SurfaceHodge::connected(0, 0, 10)]);

        let general = sum_surface_hodge(&fixed_surfaces_on_hilb2(&NikulinInvariants::from_nn(2, 2).unwrap()));
        let elliptic = sum_surface_hodge(&fixed_surfaces_on_hilb2(&NikulinInvariants::two_elliptic()));
        assert_eq!(general, FixedLocusHodge::new(4, 4, 1, 18));
        assert_eq!(elliptic, general);
    }

    #[test]
    fn sxs_fixed_locus_examples() {
        let s = fixed_surfaces_on_sxs(&NikulinInvariants::from_nn(1, 10).unwrap());
        assert_eq!(s, vec![SurfaceHodge::connected(20, 100, 202)]);
        assert!(fixed_surfaces_on_sxs(&NikulinInvariants::EMPTY).is_empty());
        let g2k1 = NikulinInvariants::from_nn(2, 2).unwrap();
        assert_eq!((g2k1.g, g2k1.k), (2, 1));
        let general = sum_surface_hodge(&fixed_surfaces_on_sxs(&g2k1));
        assert_eq!(general, FixedLocusHodge::new(4, 8, 4, 16));
        let elliptic = sum_surface_hodge(&fixed_surfaces_on_sxs(&NikulinInvariants::two_elliptic()));
        assert_eq!(elliptic, general);
    }

    #[test]
    fn t11_examples() {
        assert_eq!(t11_natural(&NikulinInvariants::from_nn(1, 10).unwrap()), 2);
        assert_eq!(t11_natural(&NikulinInvariants::EMPTY), 11);
        assert_eq!(t11_natural(&NikulinInvariants::from_nn(10, 0).unwrap()), 21);
    }

    #[test]
    fn hilb2_fixed_locus_euler_law() {
        // Euler number of the fixed locus on S^[2] is 2(r^2 - 19 r + 96) when N >= 1.
        let mut rows: Vec<_> = enumerate_admissible().into_iter().filter(|i| i.n >= 1).collect();
        rows.push(NikulinInvariants::two_elliptic());
        for inv in rows {
            let e: i64 = fixed_surfaces_on_hilb2(&inv).iter().map(SurfaceHodge::euler).sum();
            let r = i64::from(inv.r);
            assert_eq!(e, 2 * (r * r - 19 * r + 96), "{inv:?}");
        }
    }
}
