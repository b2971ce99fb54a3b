//! Every cross-check of the library in one deterministic report.
//!
//! Hard checks must pass. Known tensions (printed values that do not survive
//! recomputation) come from a fixed registry and never fail the run.

use crate::render::{rat_text, Report, Table};
use cy4quot::appendix::AppendixRow;
use cy4quot::hodge::sum_surface_hodge;
use cy4quot::k3::{enumerate_admissible, fixed_surfaces_on_hilb2, NikulinInvariants};
use cy4quot::mirror::{deform_dims, deform_relations, kahler_dims, mirror_scan, ow_counterexample, zs_mirror_identity};
use cy4quot::quotient::{
    cy_k3type, epw_diamond, kummer_diamonds, ys_assembled, ys_diamond, ys_picard_rank, zs_assembled, zs_diamond,
};
use cy4quot::riemann_roch::{chi_k3type, chi_lift, family_fixtures, h0_hilb2, h0_y, h0_z};
use cy4quot::singularity::{classify, lagrangian_spectrum, SingularityClass};
use cy4quot::Rational;
use serde::Serialize;
use serde_json::json;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    /// Empty when the check passed.
    pub detail: String,
}

/// A printed value next to its recomputation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensionRecord {
    pub location: String,
    pub fixture: String,
    pub recomputed: String,
    #[serde(rename = "match")]
    pub matches: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TensionReport {
    pub checks: Vec<CheckRecord>,
    pub tensions: Vec<TensionRecord>,
}

impl TensionReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckRecord> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn report(&self) -> Report {
        let mut checks = Table::new(["check", "passed", "detail"]).titled("checks");
        for c in &self.checks {
            checks.push([c.name.clone(), c.passed.to_string(), c.detail.clone()]);
        }
        let mut tensions = Table::new(["location", "fixture", "recomputed", "match"]).titled("tensions");
        for t in &self.tensions {
            tensions.push([t.location.clone(), t.fixture.clone(), t.recomputed.clone(), t.matches.to_string()]);
        }
        let json = json!({
            "passed": self.passed(),
            "checks": self.checks,
            "tensions": self.tensions,
        });
        Report::new(json, vec![checks, tensions])
    }
}

struct Checks(Vec<CheckRecord>);

impl Checks {
    /// Records a check from the list of its failing cases.
    fn add(&mut self, name: &str, failures: Vec<String>) {
        let detail = failures.into_iter().take(5).collect::<Vec<_>>().join("; ");
        self.0.push(CheckRecord { name: name.to_string(), passed: detail.is_empty(), detail });
    }
}

fn mismatch<T: PartialEq + std::fmt::Debug>(label: impl std::fmt::Display, got: T, want: T) -> Option<String> {
    (got != want).then(|| format!("{label}: {got:?} != {want:?}"))
}

fn rat(x: i64) -> Rational {
    Rational::from_integer(x)
}

/// Runs every check against the given transcription of the `Y_S` table.
pub fn verify_with(appendix: &[AppendixRow]) -> TensionReport {
    let mut checks = Checks(Vec::new());
    let admissible = enumerate_admissible();

    checks.add(
        "table has 65 rows in (N, N') order",
        mismatch(
            "rows",
            appendix.iter().map(|r| (r.n, r.nprime)).collect::<Vec<_>>(),
            admissible.iter().map(|i| (i.n, i.nprime)).collect::<Vec<_>>(),
        )
        .into_iter()
        .collect(),
    );

    let mut triple = Vec::new();
    for row in appendix {
        let label = format!("({}, {})", row.n, row.nprime);
        let (n, np) = (i64::from(row.n), i64::from(row.nprime));
        let Ok(inv) = NikulinInvariants::from_nn(n, np) else {
            triple.push(format!("{label}: not admissible"));
            continue;
        };
        let closed = ys_diamond(n, np).expect("admissible");
        let beauville = cy_k3type(inv.r + 1, inv.n * inv.nprime, inv.nprime * inv.nprime.saturating_sub(1) / 2);
        let assembled = ys_assembled(&inv);
        triple.extend(mismatch(format!("{label} table"), row.diamond(), closed));
        if beauville.as_ref() != Ok(&closed) {
            triple.push(format!("{label}: K3-type route {beauville:?}"));
        }
        if assembled.as_ref() != Ok(&closed) {
            triple.push(format!("{label}: assembled route {assembled:?}"));
        }
    }
    checks.add("Y_S: table = closed form = K3-type formula = assembled", triple);

    checks.add(
        "Z_S: closed form = assembled from S x S",
        admissible
            .iter()
            .filter_map(|inv| {
                let closed = zs_diamond(inv.n.into(), inv.nprime.into()).expect("admissible");
                mismatch(format!("({}, {})", inv.n, inv.nprime), zs_assembled(inv), closed)
            })
            .collect(),
    );

    let kummer = kummer_diamonds();
    checks.add(
        "Kummer Y2, Y3 recomputed from fixed loci",
        kummer[1..].iter().filter_map(|c| mismatch(c.name, c.recomputed, c.printed)).collect(),
    );

    let epw = epw_diamond();
    let mut epw_fail: Vec<String> = mismatch("EPW", epw.compact(), [2, 0, 65, 312]).into_iter().collect();
    epw_fail.extend(mismatch("EPW vs K3-type formula", Ok(epw), cy_k3type(1, 0, 45)));
    checks.add("EPW quotient", epw_fail);

    checks.add(
        "fixed-locus Euler number 2(r^2 - 19r + 96)",
        admissible
            .iter()
            .filter(|i| i.n >= 1)
            .filter_map(|inv| {
                let e = sum_surface_hodge(&fixed_surfaces_on_hilb2(inv)).euler();
                let r = i64::from(inv.r);
                mismatch(format!("({}, {})", inv.n, inv.nprime), e, 2 * (r * r - 19 * r + 96))
            })
            .collect(),
    );

    checks.add(
        "Picard rank of Y_S = h11",
        appendix
            .iter()
            .filter(|r| r.n >= 1)
            .filter_map(|r| {
                let rank = ys_picard_rank(r.n.into(), r.nprime.into()).ok()?;
                mismatch(format!("({}, {})", r.n, r.nprime), rank, r.h11)
            })
            .collect(),
    );

    let labelled: Vec<_> = appendix.iter().map(|r| ((r.n, r.nprime), r.diamond())).collect();
    let scan = mirror_scan(&labelled);
    let expected: Vec<_> = (1..=5).map(|n| ((n, n + 1), (n, n + 1))).collect();
    checks.add(
        "Y_S mirror scan: only the self-mirror rows N' = N + 1",
        mismatch("pairs", scan, expected).into_iter().collect(),
    );
    checks.add(
        "Z_S mirror identity under (N, N') -> (N', N)",
        zs_mirror_identity().iter().filter(|c| !c.mirror).map(|c| format!("{:?}", c.pair)).collect(),
    );
    let ow = ow_counterexample();
    checks.add(
        "Ohashi-Wandel quotient is not mirror to Y_S(10, 2)",
        if (ow.ow_h11, ow.ys_h31, ow.mirror_possible) == (4, 3, false) { vec![] } else { vec![format!("{ow:?}")] },
    );

    let mut deform = Vec::new();
    for r in appendix {
        let (n, np) = (i64::from(r.n), i64::from(r.nprime));
        let (Ok(def), Ok(kah), Ok(rel)) = (deform_dims(n, np), kahler_dims(n, np), deform_relations(n, np)) else {
            deform.push(format!("({n}, {np}): not admissible"));
            continue;
        };
        deform.extend(mismatch(format!("({n}, {np}) Def(Y_S)"), def.y, r.h31));
        deform.extend(mismatch(format!("({n}, {np}) Kahler(Y_S)"), kah.y, r.h11));
        deform.extend(rel.iter().filter(|x| !x.consistent()).map(|x| format!("({n}, {np}): {}", x.statement)));
    }
    checks.add("deformation and Kahler tables", deform);

    let mut rr = Vec::new();
    for (hh, want) in [(2, 6), (4, 10), (8, 21)] {
        rr.extend(mismatch(format!("h0(S^[2], {hh})"), h0_hilb2(hh), Ok(want)));
    }
    rr.extend(mismatch("h0_Z(3, 72)", h0_z(3, 72), rat(9)));
    rr.extend(mismatch("h0_Y(3, 72, 8)", h0_y(3, 72, 8), rat(6)));
    rr.extend(mismatch("chi_lift(9, 72, 4, 2)", chi_lift(rat(9), 72, 4, 2), rat(9)));
    rr.extend(mismatch("chi_lift(4, 32, 4, 2)", chi_lift(rat(4), 32, 4, 2), rat(4)));
    rr.extend(mismatch("chi_k3type(0)", chi_k3type(0), rat(3)));
    let fixtures = family_fixtures();
    for f in &fixtures {
        for v in f.values.iter().filter(|v| v.hard) {
            rr.extend(mismatch(format!("{} {}", f.name, v.key), v.recomputed, v.expected));
        }
    }
    checks.add("Riemann-Roch fixtures", rr);

    checks.add(
        "Lagrangian spectra are canonical and not terminal",
        [2, 3, 5, 7, 11, 13, 17, 19, 23]
            .into_iter()
            .filter_map(|p| {
                let class = lagrangian_spectrum(p).and_then(|s| classify(&s));
                (class != Ok(SingularityClass::CanonicalNotTerminal)).then(|| format!("p={p}: {class:?}"))
            })
            .collect(),
    );

    let mut tensions = vec![{
        let y1 = &kummer[0];
        TensionRecord {
            location: "generalized Kummer quotient Y1".into(),
            fixture: y1.printed.to_string(),
            recomputed: y1.recomputed.to_string(),
            matches: y1.matches,
        }
    }];
    for f in &fixtures {
        for v in f.values.iter().filter(|v| !v.hard) {
            tensions.push(TensionRecord {
                location: format!("{} family {}", f.name, v.key),
                fixture: rat_text(&v.expected),
                recomputed: rat_text(&v.recomputed),
                matches: v.matches,
            });
        }
    }

    TensionReport { checks: checks.0, tensions }
}

pub fn verify() -> TensionReport {
    verify_with(&cy4quot::appendix::APPENDIX)
}
