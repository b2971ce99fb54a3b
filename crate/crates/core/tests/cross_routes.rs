//! Independent computation routes for the same numbers must agree on every
//! admissible pair.

use cy4quot::appendix::APPENDIX;
use cy4quot::hodge::sum_surface_hodge;
use cy4quot::k3::{enumerate_admissible, fixed_surfaces_on_hilb2, fixed_surfaces_on_sxs, NikulinInvariants, Shape};
use cy4quot::mirror::{deform_dims, deform_relations, kahler_dims};
use cy4quot::quotient::{
    beauville_be, cy_k3type, ys_assembled, ys_branch_classes, ys_diamond, ys_picard_rank, zs_assembled, zs_diamond,
};
use proptest::prelude::*;

fn pairs() -> impl Iterator<Item = (i64, i64)> {
    APPENDIX.iter().map(|r| (i64::from(r.n), i64::from(r.nprime)))
}

#[test]
fn ys_three_routes_and_table() {
    for (row, inv) in APPENDIX.iter().zip(enumerate_admissible()) {
        let (n, np) = (i64::from(inv.n), i64::from(inv.nprime));
        let closed = ys_diamond(n, np).unwrap();
        let c = inv.n * inv.nprime;
        let d = inv.nprime * inv.nprime.saturating_sub(1) / 2;
        assert_eq!(closed, cy_k3type(inv.r + 1, c, d).unwrap(), "{inv:?}");
        assert_eq!(closed, ys_assembled(&inv).unwrap(), "{inv:?}");
        assert_eq!(closed, row.diamond(), "{inv:?}");
        assert_eq!(closed.h21, c);
    }
}

#[test]
fn zs_assembly() {
    for inv in enumerate_admissible() {
        let closed = zs_diamond(inv.n.into(), inv.nprime.into()).unwrap();
        assert_eq!(closed, zs_assembled(&inv), "{inv:?}");
        let components = fixed_surfaces_on_sxs(&inv).len() as u32;
        assert_eq!(closed.h11, 2 * inv.r + components);
        if inv.shape == Shape::General {
            assert_eq!(components, inv.n * inv.n);
        }
        assert_eq!(closed.h21, 2 * inv.n * inv.nprime);
    }
    let te = NikulinInvariants::two_elliptic();
    assert_eq!(zs_assembled(&te), zs_diamond(2, 2).unwrap());
    assert_eq!(fixed_surfaces_on_sxs(&te).len(), 4);
    assert!(fixed_surfaces_on_sxs(&NikulinInvariants::EMPTY).is_empty());
}

#[test]
fn fixed_locus_euler_relation() {
    for inv in enumerate_admissible() {
        let f = sum_surface_hodge(&fixed_surfaces_on_hilb2(&inv));
        let t = i64::from(inv.r + 1);
        assert_eq!(f.euler(), 2 * t * t - 42 * t + 232, "{inv:?}");
        if inv.n >= 1 {
            let r = i64::from(inv.r);
            assert_eq!(f.euler(), 2 * (r * r - 19 * r + 96));
        }
        let (b, e) = beauville_be(inv.r + 1, f.c, f.d).unwrap();
        assert_eq!((b, e), (f.b, f.e), "{inv:?}");
    }
}

#[test]
fn picard_rank_and_branch_vectors() {
    for (n, np) in pairs().filter(|&(n, _)| n >= 1) {
        let rank = ys_picard_rank(n, np).unwrap();
        assert_eq!(rank, ys_diamond(n, np).unwrap().h11);
        let bc = ys_branch_classes(n, np).unwrap();
        assert_eq!(bc.basis.len() as u32, rank);
        let sum: Vec<i64> = bc.b_iota.iter().zip(&bc.b_sigma).map(|(a, b)| a + b).collect();
        assert_eq!(bc.sum, sum);
    }
}

#[test]
fn deformation_tables() {
    for (n, np) in pairs() {
        let ys = ys_diamond(n, np).unwrap();
        let zs = zs_diamond(n, np).unwrap();
        let def = deform_dims(n, np).unwrap();
        let kah = kahler_dims(n, np).unwrap();
        assert_eq!(def.y, ys.h31);
        assert_eq!(def.z, zs.h31);
        assert_eq!(kah.z, zs.h11);
        assert_eq!(kah.y, ys.h11);
        assert_eq!(i64::from(def.s), 10 - n + np);
        assert_eq!(i64::from(kah.hilb2), 11 + n - np);
        for relation in deform_relations(n, np).unwrap() {
            assert!(relation.consistent(), "({n}, {np}): {}", relation.statement);
        }
    }
}

proptest! {
    #[test]
    fn beauville_euler_identity(t11 in 0u32..=21, c in 0u32..200, d in 0u32..200) {
        if let Ok((b, e)) = beauville_be(t11, c, d) {
            let (b, c, d, e, t) = (i64::from(b), i64::from(c), i64::from(d), i64::from(e), i64::from(t11));
            prop_assert_eq!(2 * b - 4 * c + 2 * d + e, 2 * t * t - 42 * t + 232);
        }
    }

    #[test]
    fn from_ra_round_trip(idx in 0usize..65) {
        let inv = enumerate_admissible()[idx];
        let back = NikulinInvariants::from_ra(inv.r.into(), inv.a.into(), inv.shape == Shape::Empty).unwrap();
        prop_assert_eq!(back, inv);
    }
}
