//! Acceptance suite: one line per criterion, exit status 1 if any fails.

use cy4quot::appendix::AppendixRow;
use cy4quot::hodge::{sum_surface_hodge, CalabiYau4Diamond, FixedLocusHodge};
use cy4quot::k3::{enumerate_admissible, fixed_surfaces_on_hilb2, fixed_surfaces_on_sxs, NikulinInvariants, Shape};
use cy4quot::mirror::{
    deform_dims, deform_relations, kahler_dims, mirror_scan_ys, ow_counterexample, zs_mirror_identity,
};
use cy4quot::quotient::{
    beauville_be, cy_general, cy_k3type, epw_diamond, k3type_t, kummer_diamonds, ys_diamond, ys_picard_rank,
    zs_diamond, zs_invariant_t, KUMMER_T,
};
use cy4quot::riemann_roch::{chi_k3type, chi_lift, family_fixtures, h0_hilb2, h0_y, h0_z};
use cy4quot::singularity::{
    age, classify, lagrangian_spectrum, validate_spectrum, volume_preserved, LocalSpectrum, SingularityClass,
};
use cy4quot::Rational;
use cy4quot_cli::parse_appendix_csv;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use std::collections::BTreeSet;
use std::process::Command;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn eq<T: PartialEq + std::fmt::Debug>(what: impl std::fmt::Display, got: T, want: T) -> Outcome {
    ensure(got == want, || format!("{what}: got {got:?}, want {want:?}"))
}

fn cli(args: &[&str]) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_cy4quot")).args(args).output().expect("binary runs");
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn d(h11: u32, h21: u32, h31: u32, h22: u32) -> CalabiYau4Diamond {
    CalabiYau4Diamond::new(h11, h21, h31, h22)
}

fn fixture_rows() -> Vec<AppendixRow> {
    let text = include_str!("fixtures/appendix.csv");
    parse_appendix_csv(text).expect("fixture parses")
}

fn nn(inv: &NikulinInvariants) -> (i64, i64) {
    (i64::from(inv.n), i64::from(inv.nprime))
}

fn appendix_reproduction() -> Outcome {
    let (stdout, code) = cli(&["appendix", "--format", "csv"]);
    eq("exit code", code, 0)?;
    let text = String::from_utf8(stdout).map_err(|e| e.to_string())?;
    eq("csv text", text.as_str(), include_str!("fixtures/appendix.csv"))?;
    let rows = parse_appendix_csv(&text).map_err(|e| e.to_string())?;
    eq("row count", rows.len(), 65)?;
    for ((n, np), want) in [
        ((1, 10), d(4, 10, 64, 296)),
        ((3, 3), d(18, 9, 13, 150)),
        ((10, 0), d(77, 0, 0, 352)),
        ((0, 0), d(12, 0, 10, 132)),
    ] {
        let row = rows.iter().find(|r| (r.n, r.nprime) == (n, np)).ok_or(format!("missing ({n}, {np})"))?;
        eq(format!("({n}, {np})"), row.diamond(), want)?;
    }
    Ok(())
}

fn triple_route() -> Outcome {
    let fixture = fixture_rows();
    let admissible = enumerate_admissible();
    eq("admissible count", admissible.len(), 65)?;
    for (inv, row) in admissible.iter().zip(&fixture) {
        let (n, np) = nn(inv);
        let label = format!("({n}, {np})");
        let closed = ys_diamond(n, np).map_err(|e| e.to_string())?;
        let c = inv.n * inv.nprime;
        let dd = inv.nprime * inv.nprime.saturating_sub(1) / 2;
        let beauville = cy_k3type(inv.r + 1, c, dd).map_err(|e| e.to_string())?;
        let t = k3type_t(inv.r + 1).map_err(|e| e.to_string())?;
        let assembled = cy_general(t, sum_surface_hodge(&fixed_surfaces_on_hilb2(inv)));
        eq(format!("{label} closed vs K3-type"), closed, beauville)?;
        eq(format!("{label} closed vs assembled"), closed, assembled)?;
        eq(format!("{label} closed vs table"), closed, row.diamond())?;
    }
    Ok(())
}

fn zs_assembly() -> Outcome {
    for inv in enumerate_admissible() {
        let (n, np) = nn(&inv);
        let r = i64::from(inv.r);
        // Invariant part of H*(S x S): t11 = 2r, t31 = 2(20 - r), t22 = r^2 + (20 - r)^2 + 4.
        let t = zs_invariant_t(inv.r);
        eq(
            format!("({n}, {np}) t"),
            [t.t11, t.t21, t.t31, t.t22].map(i64::from),
            [2 * r, 0, 40 - 2 * r, r * r + (20 - r) * (20 - r) + 4],
        )?;
        let assembled = cy_general(t, sum_surface_hodge(&fixed_surfaces_on_sxs(&inv)));
        eq(format!("({n}, {np})"), zs_diamond(n, np).map_err(|e| e.to_string())?, assembled)?;
    }
    Ok(())
}

fn kummer() -> Outcome {
    eq("t", KUMMER_T.t11 + KUMMER_T.t21 + KUMMER_T.t31 + KUMMER_T.t22, 3 + 2 + 4 + 54)?;
    let report = kummer_diamonds();
    eq("Y2 fixture", report[1].printed, d(6, 4, 4, 68))?;
    eq("Y2 recomputed", report[1].recomputed, d(6, 4, 4, 68))?;
    eq("Y3 fixture", report[2].printed, d(5, 3, 4, 66))?;
    eq("Y3 recomputed", report[2].recomputed, d(5, 3, 4, 66))?;
    eq("Y3 via general formula", cy_general(KUMMER_T, FixedLocusHodge::new(2, 1, 0, 12)), d(5, 3, 4, 66))?;
    eq("Y1 fixture", report[0].printed, d(9, 8, 5, 75))?;
    eq("Y1 recomputed", report[0].recomputed, d(9, 8, 5, 76))?;
    ensure(!report[0].matches, || "Y1 tension not recorded".into())?;
    let (stdout, code) = cli(&["verify"]);
    eq("verify exit code", code, 0)?;
    let v: serde_json::Value = serde_json::from_slice(&stdout).map_err(|e| e.to_string())?;
    let y1 = v["tensions"].as_array().and_then(|t| t.first()).ok_or("no tensions")?;
    eq(
        "reported Y1",
        (y1["fixture"].as_str(), y1["recomputed"].as_str()),
        (Some("(9, 8, 5, 75)"), Some("(9, 8, 5, 76)")),
    )
}

fn epw() -> Outcome {
    let e = epw_diamond();
    eq("diamond", e, d(2, 0, 65, 312))?;
    eq("K3-type formula", Ok(e), cy_k3type(1, 0, 45))?;
    let t = k3type_t(1).map_err(|e| e.to_string())?;
    let (b, fixed_e) = beauville_be(1, 0, 45).map_err(|e| e.to_string())?;
    eq("h22 split", (t.t22, fixed_e), (212, 100))?;
    eq("h31 split", (t.t31, 45), (20, 45))?;
    eq("h11 split", (t.t11, b), (1, 1))?;
    eq("sums", (t.t22 + fixed_e, t.t31 + 45), (e.h22, e.h31))
}

fn euler_law() -> Outcome {
    for inv in enumerate_admissible() {
        let f = sum_surface_hodge(&fixed_surfaces_on_hilb2(&inv));
        let (b, c, dd, e) = (i64::from(f.b), i64::from(f.c), i64::from(f.d), i64::from(f.e));
        let t = i64::from(inv.r) + 1;
        eq(
            format!("({}, {}) Beauville relation", inv.n, inv.nprime),
            2 * b - 4 * c + 2 * dd + e,
            2 * t * t - 42 * t + 232,
        )?;
        if inv.n >= 1 {
            let r = i64::from(inv.r);
            let euler: i64 = fixed_surfaces_on_hilb2(&inv).iter().map(|s| s.euler()).sum();
            eq(format!("({}, {}) Euler", inv.n, inv.nprime), euler, 2 * (r * r - 19 * r + 96))?;
        }
    }
    Ok(())
}

fn picard_rank() -> Outcome {
    let mut count = 0;
    for inv in enumerate_admissible().iter().filter(|i| i.n >= 1) {
        let (n, np) = nn(inv);
        let rank = ys_picard_rank(n, np).map_err(|e| e.to_string())?;
        eq(format!("({n}, {np})"), rank, ys_diamond(n, np).map_err(|e| e.to_string())?.h11)?;
        count += 1;
    }
    eq("cases", count, 64)
}

fn mirror() -> Outcome {
    let expected: Vec<_> = (1..=5).map(|n| ((n, n + 1), (n, n + 1))).collect();
    eq("scan", mirror_scan_ys(), expected)?;
    let checks = zs_mirror_identity();
    let admissible: BTreeSet<_> = enumerate_admissible().iter().map(|i| (i.n, i.nprime)).collect();
    let swappable = admissible.iter().filter(|(n, np)| admissible.contains(&(*np, *n))).count();
    eq("Z_S pairs checked", checks.len(), swappable)?;
    ensure(checks.iter().all(|c| c.mirror), || "Z_S mirror identity fails".into())?;
    let ow = ow_counterexample();
    eq("Ohashi-Wandel", (ow.ow_h11, ow.ys_h31, ow.mirror_possible), (4, 3, false))
}

fn deformations() -> Outcome {
    for inv in enumerate_admissible() {
        let (n, np) = nn(&inv);
        let label = format!("({n}, {np})");
        let def = deform_dims(n, np).map_err(|e| e.to_string())?;
        let kah = kahler_dims(n, np).map_err(|e| e.to_string())?;
        let got = [def.s, def.sxs, def.z, def.hilb2, def.sxs_sigma, def.y].map(i64::from);
        let s = 10 - n + np;
        let want = [s, 2 * s, 20 - 2 * n + 2 * np + np * np, s, s, (20 - 2 * n + np + np * np) / 2];
        eq(format!("{label} deform"), got, want)?;
        eq(
            format!("{label} kahler"),
            [kah.z, kah.hilb2, kah.y].map(i64::from),
            [20 + 2 * n - 2 * np + n * n, 11 + n - np, (24 + 3 * n - 2 * np + n * n) / 2],
        )?;
        let ys = ys_diamond(n, np).map_err(|e| e.to_string())?;
        eq(format!("{label} Y rows"), (def.y, kah.y), (ys.h31, ys.h11))?;
        let rel = deform_relations(n, np).map_err(|e| e.to_string())?;
        let conditions = [np == 0, true, np <= 1, (n, np) == (10, 0)];
        for (r, cond) in rel.iter().zip(conditions) {
            ensure(r.holds, || format!("{label}: {} fails", r.statement))?;
            eq(format!("{label}: {}", r.statement), r.equality, cond)?;
        }
    }
    Ok(())
}

fn riemann_roch() -> Outcome {
    let int = Rational::from_integer;
    for (hh, want) in [(2, 6), (4, 10), (8, 21)] {
        eq(format!("h0 on S^[2] at {hh}"), h0_hilb2(hh).map_err(|e| e.to_string())?, want)?;
    }
    eq("h0_Z(3, 72)", h0_z(3, 72), int(9))?;
    eq("h0_Y(3, 72, 8)", h0_y(3, 72, 8), int(6))?;
    eq("h0_Y through Z", chi_lift(h0_z(3, 72), 8, 2, 2), int(6))?;
    eq("chi_lift(9, 72, 4, 2)", chi_lift(int(9), 72, 4, 2), int(9))?;
    eq("chi_lift for F_Z", chi_lift(int(4), 32, 4, 2), int(4))?;
    eq("chi(F_S^[2])", chi_k3type(0), int(3))?;
    let fixtures = family_fixtures();
    let value = |family: &str, key: &str| {
        fixtures
            .iter()
            .find(|f| f.name == family)
            .and_then(|f| f.value(key))
            .cloned()
            .ok_or(format!("{family} {key} missing"))
    };
    for (family, key, want) in [
        ("U2", "chi(l_S2)", 3),
        ("U2", "chi(l_1Z)", 2),
        ("U2", "chi(H_1Z)", 4),
        ("U2", "chi(l_Z+m_1Z)", 8),
        ("U", "chi(F_Z)", 4),
        ("U", "chi(F_Y)", 3),
        ("deg2", "hSigma", 72),
        ("deg2", "hSigma_Z", 8),
    ] {
        eq(format!("{family} {key}"), value(family, key)?.recomputed, int(want))?;
    }
    let (stdout, _) = cli(&["verify"]);
    let v: serde_json::Value = serde_json::from_slice(&stdout).map_err(|e| e.to_string())?;
    let locations: Vec<&str> =
        v["tensions"].as_array().ok_or("no tensions")?.iter().filter_map(|t| t["location"].as_str()).collect();
    for key in ["chi(l_Z)", "chi(l_Y)"] {
        ensure(locations.iter().any(|l| l.ends_with(key)), || format!("{key} not in tension report"))?;
        ensure(!value("U2", key)?.hard, || format!("{key} is a hard check"))?;
    }
    Ok(())
}

fn vectors(p: u32, len: usize) -> Vec<Vec<u32>> {
    (0..len).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter().flat_map(|v| (0..p).map(move |a| [v.clone(), vec![a]].concat())).collect()
    })
}

/// Local forms: symplectic spectra pair `a` with `p - a`; non-symplectic ones
/// with `p = 2` have exactly `n` zeros; with `p` odd they pair `0` with `1`,
/// `a` with `p + 1 - a` and leave copies of `(p + 1)/2`.
fn is_local_form(v: &[u32], p: u32, n: usize, symplectic: bool) -> bool {
    let mut rest = v.to_vec();
    rest.sort_unstable();
    let take = |rest: &mut Vec<u32>, x: u32| rest.iter().position(|&y| y == x).map(|i| rest.remove(i)).is_some();
    if !symplectic && p == 2 {
        return v.iter().filter(|&&a| a == 0).count() == n;
    }
    let middle = p.div_ceil(2);
    while let Some(&a) = rest.first() {
        rest.remove(0);
        let partner = if symplectic {
            (p - a) % p
        } else if a == 0 {
            1
        } else if a == 1 {
            return false;
        } else if a == middle {
            continue;
        } else {
            p + 1 - a
        };
        if !take(&mut rest, partner) {
            return false;
        }
    }
    true
}

fn singularities() -> Outcome {
    for p in [2, 3, 5, 7, 11] {
        let s = lagrangian_spectrum(p).map_err(|e| e.to_string())?;
        eq(format!("Lagrangian p={p}"), classify(&s), Ok(SingularityClass::CanonicalNotTerminal))?;
    }
    for p in [2, 3] {
        for n in 1..=4 {
            for symplectic in [true, false] {
                for v in vectors(p, 2 * n) {
                    let s = LocalSpectrum::new(p, v.clone()).map_err(|e| e.to_string())?;
                    let got = validate_spectrum(&s, n, symplectic).map_err(|e| e.to_string())?.is_valid();
                    eq(format!("p={p} n={n} symplectic={symplectic} {v:?}"), got, is_local_form(&v, p, n, symplectic))?;
                }
            }
        }
    }
    for p in [2, 3, 5, 7, 11, 13] {
        for n in 1..=26 {
            eq(format!("volume p={p} n={n}"), volume_preserved(p, n, false), Ok(n % p == 0))?;
        }
    }
    let strategy = (prop::sample::select(vec![2u32, 3, 5, 7, 11, 13]), 1usize..=4).prop_flat_map(|(p, m)| {
        prop::collection::vec(0..p, m).prop_map(move |halves| {
            let mut exponents: Vec<u32> = halves.to_vec();
            exponents.extend(halves.iter().map(|&a| (p - a) % p));
            (p, exponents)
        })
    });
    let mut runner = TestRunner::new(Config { cases: 10_000, failure_persistence: None, ..Config::default() });
    runner
        .run(&strategy, |(p, exponents)| {
            let s = LocalSpectrum::new(p, exponents.clone()).unwrap();
            if exponents.iter().all(|&a| a == 0) {
                return Ok(());
            }
            let a = age(&s);
            prop_assert!(a.is_integer() && a > Rational::from_integer(0), "age {} for {:?}", a, exponents);
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn determinism() -> Outcome {
    for format in ["json", "md", "csv", "tex"] {
        let first = cli(&["verify", "--format", format]);
        let second = cli(&["verify", "--format", format]);
        eq(format!("verify --format {format} code"), first.1, 0)?;
        ensure(first == second, || format!("verify --format {format} differs between runs"))?;
    }
    let (stdout, _) = cli(&["appendix", "--format", "csv"]);
    let rows = parse_appendix_csv(&String::from_utf8(stdout).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    let rebuilt: Vec<(u32, u32, CalabiYau4Diamond)> = enumerate_admissible()
        .iter()
        .map(|inv| (inv.n, inv.nprime, ys_diamond(inv.n.into(), inv.nprime.into()).unwrap()))
        .collect();
    eq("csv round trip", rows.iter().map(|r| (r.n, r.nprime, r.diamond())).collect::<Vec<_>>(), rebuilt)?;
    ensure(enumerate_admissible()[0].shape == Shape::Empty, || "first row is not the empty fixed locus".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("appendix reproduction", appendix_reproduction),
        ("triple-route agreement for Y_S", triple_route),
        ("Z_S assembly", zs_assembly),
        ("generalized Kummer fixtures", kummer),
        ("EPW quotient", epw),
        ("Euler-characteristic law", euler_law),
        ("Picard rank of Y_S", picard_rank),
        ("mirror scan", mirror),
        ("deformation tables", deformations),
        ("Riemann-Roch fixtures", riemann_roch),
        ("singularity suite", singularities),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
