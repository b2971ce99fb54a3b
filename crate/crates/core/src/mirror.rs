//! Deformation and Kahler dimensions of the quotient constructions, and
//! Hodge-level mirror checks.

use crate::appendix::APPENDIX;
use crate::error::{Error, Result};
use crate::hodge::CalabiYau4Diamond;
use crate::k3::NikulinInvariants;
use crate::quotient::ys_diamond;
use serde::Serialize;

/// Dimensions of local complex deformations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DeformDims {
    pub s: u32,
    pub sxs: u32,
    pub z: u32,
    pub hilb2: u32,
    pub sxs_sigma: u32,
    pub y: u32,
}

impl DeformDims {
    pub fn rows(&self) -> [(&'static str, u32); 6] {
        [
            ("(S,iota)", self.s),
            ("(SxS,iota x iota)", self.sxs),
            ("Z_S", self.z),
            ("(S^[2],iota^[2])", self.hilb2),
            ("(SxS,iota x iota,sigma)", self.sxs_sigma),
            ("Y_S", self.y),
        ]
    }
}

/// Dimensions of Kahler deformations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct KahlerDims {
    pub z: u32,
    pub hilb2: u32,
    pub y: u32,
}

impl KahlerDims {
    pub fn rows(&self) -> [(&'static str, u32); 3] {
        [("Z_S", self.z), ("(S^[2],iota^[2])", self.hilb2), ("Y_S", self.y)]
    }
}

fn to_u32(x: i64) -> u32 {
    u32::try_from(x).expect("dimension is non-negative on admissible pairs")
}

fn halve(what: &'static str, numerator: i64) -> Result<u32> {
    if numerator % 2 != 0 {
        return Err(Error::OddNumerator { what, numerator });
    }
    Ok(to_u32(numerator / 2))
}

pub fn deform_dims(n: i64, nprime: i64) -> Result<DeformDims> {
    NikulinInvariants::from_nn(n, nprime)?;
    let s = 10 - n + nprime;
    Ok(DeformDims {
        s: to_u32(s),
        sxs: to_u32(2 * s),
        z: to_u32(20 - 2 * n + 2 * nprime + nprime * nprime),
        hilb2: to_u32(s),
        sxs_sigma: to_u32(s),
        y: halve("Def(Y_S)", 20 - 2 * n + nprime + nprime * nprime)?,
    })
}

pub fn kahler_dims(n: i64, nprime: i64) -> Result<KahlerDims> {
    NikulinInvariants::from_nn(n, nprime)?;
    Ok(KahlerDims {
        z: to_u32(20 + 2 * n - 2 * nprime + n * n),
        hilb2: to_u32(11 + n - nprime),
        y: halve("Kahler(Y_S)", 24 + 3 * n - 2 * nprime + n * n)?,
    })
}

/// One comparison between deformation dimensions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeformRelation {
    pub statement: &'static str,
    /// The inequality (or identity) itself.
    pub holds: bool,
    pub equality: bool,
    /// The predicted condition for equality.
    pub condition: bool,
}

impl DeformRelation {
    pub fn consistent(&self) -> bool {
        self.holds && self.equality == self.condition
    }
}

pub fn deform_relations(n: i64, nprime: i64) -> Result<[DeformRelation; 4]> {
    let d = deform_dims(n, nprime)?;
    Ok([
        DeformRelation {
            statement: "Def(Z_S) >= Def(SxS), equality iff N' = 0",
            holds: d.z >= d.sxs,
            equality: d.z == d.sxs,
            condition: nprime == 0,
        },
        DeformRelation {
            statement: "Def(S^[2]) = Def(SxS, sigma)",
            holds: d.hilb2 == d.sxs_sigma,
            equality: d.hilb2 == d.sxs_sigma,
            condition: true,
        },
        DeformRelation {
            statement: "Def(Y_S) >= Def(S^[2]), equality iff N' in {0, 1}",
            holds: d.y >= d.hilb2,
            equality: d.y == d.hilb2,
            condition: nprime <= 1,
        },
        DeformRelation {
            statement: "Def(Y_S) <= Def(Z_S), equality iff (N, N') = (10, 0)",
            holds: d.y <= d.z,
            equality: d.y == d.z,
            condition: (n, nprime) == (10, 0),
        },
    ])
}

/// Which Hodge numbers a mirror pair must exchange or share.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MirrorMode {
    /// `h11 <-> h31`, equal `h22` and equal `h21`.
    #[default]
    Strict,
    /// Only `h11 <-> h31` and equal `h22`.
    Relaxed,
}

pub fn is_mirror(d1: &CalabiYau4Diamond, d2: &CalabiYau4Diamond) -> bool {
    is_mirror_with(d1, d2, MirrorMode::Strict)
}

pub fn is_mirror_with(d1: &CalabiYau4Diamond, d2: &CalabiYau4Diamond, mode: MirrorMode) -> bool {
    let base = d1.h11 == d2.h31 && d1.h31 == d2.h11 && d1.h22 == d2.h22;
    match mode {
        MirrorMode::Strict => base && d1.h21 == d2.h21,
        MirrorMode::Relaxed => base,
    }
}

pub type NnPair = (u32, u32);

/// All unordered pairs of table rows whose diamonds are mirror, sorted.
pub fn mirror_scan_ys() -> Vec<(NnPair, NnPair)> {
    mirror_scan(&APPENDIX.map(|r| ((r.n, r.nprime), r.diamond())))
}

/// Mirror scan over any labelled list of diamonds.
pub fn mirror_scan(rows: &[(NnPair, CalabiYau4Diamond)]) -> Vec<(NnPair, NnPair)> {
    let mut out: Vec<_> = rows
        .iter()
        .enumerate()
        .flat_map(|(i, a)| rows[i..].iter().map(move |b| (a, b)))
        .filter(|(a, b)| is_mirror(&a.1, &b.1))
        .map(|(a, b)| (a.0.min(b.0), a.0.max(b.0)))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}

/// `Z_S(N, N')` against `Z_S(N', N)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZsMirrorCheck {
    pub pair: NnPair,
    pub swapped: NnPair,
    pub mirror: bool,
}

/// Mirror check on every admissible `(N, N')` whose swap is also admissible.
pub fn zs_mirror_identity() -> Vec<ZsMirrorCheck> {
    use crate::quotient::zs_diamond;
    APPENDIX
        .iter()
        .filter_map(|row| {
            let (n, np) = (i64::from(row.n), i64::from(row.nprime));
            let a = zs_diamond(n, np).ok()?;
            let b = zs_diamond(np, n).ok()?;
            Some(ZsMirrorCheck { pair: (row.n, row.nprime), swapped: (row.nprime, row.n), mirror: is_mirror(&a, &b) })
        })
        .collect()
}

/// Comparison of the Ohashi-Wandel quotient with `Y_S(10, 2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OwReport {
    pub t11: u32,
    pub components: u32,
    pub ow_h11: u32,
    pub ys_h31: u32,
    pub mirror_possible: bool,
}

pub fn ow_counterexample() -> OwReport {
    let (t11, components) = (2, 2);
    let ow_h11 = t11 + components;
    let ys_h31 = ys_diamond(10, 2).expect("(10, 2) is admissible").h31;
    OwReport { t11, components, ow_h11, ys_h31, mirror_possible: ow_h11 == ys_h31 }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quotient::zs_diamond;
    use proptest::prelude::*;

    #[test]
    fn deform_examples() {
        let row = |d: DeformDims| d.rows().map(|(_, v)| v);
        assert_eq!(row(deform_dims(10, 0).unwrap()), [0; 6]);
        assert_eq!(row(deform_dims(1, 10).unwrap()), [19, 38, 138, 19, 19, 64]);
        assert_eq!(row(deform_dims(0, 0).unwrap()), [10, 20, 20, 10, 10, 10]);
        assert!(deform_dims(3, 8).is_err());
    }

    #[test]
    fn kahler_examples() {
        let row = |d: KahlerDims| d.rows().map(|(_, v)| v);
        assert_eq!(row(kahler_dims(1, 10).unwrap()), [3, 2, 4]);
        assert_eq!(row(kahler_dims(10, 0).unwrap()), [140, 21, 77]);
        assert_eq!(row(kahler_dims(2, 2).unwrap()), [24, 11, 15]);
    }

    #[test]
    fn relation_examples() {
        let all = deform_relations(10, 0).unwrap();
        assert!(all.iter().all(|r| r.equality && r.condition && r.consistent()));
        assert!(deform_relations(1, 1).unwrap()[2].equality);
        let first = &deform_relations(1, 10).unwrap()[0];
        assert!(first.holds && !first.equality && !first.condition);
    }

    #[test]
    fn mirror_examples() {
        let y12 = ys_diamond(1, 2).unwrap();
        assert_eq!(y12, CalabiYau4Diamond::new(12, 2, 12, 136));
        assert!(is_mirror(&y12, &y12));
        assert!(is_mirror(&zs_diamond(1, 10).unwrap(), &zs_diamond(10, 1).unwrap()));
        assert!(!is_mirror(&ys_diamond(1, 0).unwrap(), &ys_diamond(0, 0).unwrap()));
        let a = CalabiYau4Diamond::new(3, 1, 5, 10);
        let b = CalabiYau4Diamond::new(5, 2, 3, 10);
        assert!(!is_mirror(&a, &b));
        assert!(is_mirror_with(&a, &b, MirrorMode::Relaxed));
    }

    #[test]
    fn scan() {
        let pairs = mirror_scan_ys();
        let expected: Vec<_> = (1..=5).map(|n| ((n, n + 1), (n, n + 1))).collect();
        assert_eq!(pairs, expected);
    }

    #[test]
    fn zs_identity() {
        let checks = zs_mirror_identity();
        assert!(!checks.is_empty());
        assert!(checks.iter().all(|c| c.mirror));
        assert!(checks.iter().any(|c| c.pair == (1, 10)));
        assert!(checks.iter().all(|c| c.pair != (8, 0)));
    }

    #[test]
    fn ow() {
        let report = ow_counterexample();
        assert_eq!((report.ow_h11, report.ys_h31, report.mirror_possible), (4, 3, false));
    }

    fn any_cy() -> impl Strategy<Value = CalabiYau4Diamond> {
        (0u32..30, 0u32..30, 0u32..30, 0u32..30).prop_map(|(a, b, c, d)| CalabiYau4Diamond::new(a, b, c, d))
    }

    proptest! {
        #[test]
        fn mirror_is_symmetric(a in any_cy(), b in any_cy()) {
            prop_assert_eq!(is_mirror(&a, &b), is_mirror(&b, &a));
            prop_assert_eq!(is_mirror_with(&a, &b, MirrorMode::Relaxed), is_mirror_with(&b, &a, MirrorMode::Relaxed));
        }

        #[test]
        fn mirror_of_the_swap(a in any_cy()) {
            let swapped = CalabiYau4Diamond::new(a.h31, a.h21, a.h11, a.h22);
            prop_assert!(is_mirror(&a, &swapped));
        }
    }
}
