//! Hodge diamonds of compact 4-folds and of the surfaces in a fixed locus.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Full `h^{p,q}` table, indexed `[p][q]` with `0 <= p, q <= 4`.
pub type HodgeTable = [[u32; 5]; 5];

/// Hodge diamond of a compact Kahler 4-fold.
///
/// Only the nine entries with `p >= q` and `p + q <= 4` are stored; every
/// other `h^{p,q}` follows from complex conjugation and Serre duality.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HodgeDiamond4 {
    pub h00: u32,
    pub h10: u32,
    pub h20: u32,
    pub h11: u32,
    pub h30: u32,
    pub h21: u32,
    pub h40: u32,
    pub h31: u32,
    pub h22: u32,
}

/// Maps any `(p, q)` to the stored representative under conjugation and Serre duality.
fn representative(p: usize, q: usize) -> (usize, usize) {
    let (p, q) = if p >= q { (p, q) } else { (q, p) };
    if p + q > 4 {
        let (p2, q2) = (4 - p, 4 - q);
        if p2 >= q2 {
            (p2, q2)
        } else {
            (q2, p2)
        }
    } else {
        (p, q)
    }
}

impl HodgeDiamond4 {
    #[allow(clippy::too_many_arguments)]
    pub const fn new(h00: u32, h10: u32, h20: u32, h11: u32, h30: u32, h21: u32, h40: u32, h31: u32, h22: u32) -> Self {
        Self { h00, h10, h20, h11, h30, h21, h40, h31, h22 }
    }

    /// Looks up `h^{p,q}` for any `0 <= p, q <= 4`.
    pub fn get(&self, p: usize, q: usize) -> u32 {
        assert!(p <= 4 && q <= 4, "h^{{{p},{q}}} is outside the diamond of a 4-fold");
        match representative(p, q) {
            (0, 0) => self.h00,
            (1, 0) => self.h10,
            (2, 0) => self.h20,
            (1, 1) => self.h11,
            (3, 0) => self.h30,
            (2, 1) => self.h21,
            (4, 0) => self.h40,
            (3, 1) => self.h31,
            (2, 2) => self.h22,
            other => unreachable!("no stored entry for {other:?}"),
        }
    }

    pub fn expand(&self) -> HodgeTable {
        let mut table = [[0u32; 5]; 5];
        for (p, row) in table.iter_mut().enumerate() {
            for (q, entry) in row.iter_mut().enumerate() {
                *entry = self.get(p, q);
            }
        }
        table
    }

    /// Inverse of [`expand`](Self::expand). Returns `None` when the table
    /// breaks conjugation or Serre symmetry.
    pub fn compress(table: &HodgeTable) -> Option<Self> {
        let d = Self::new(
            table[0][0],
            table[1][0],
            table[2][0],
            table[1][1],
            table[3][0],
            table[2][1],
            table[4][0],
            table[3][1],
            table[2][2],
        );
        (d.expand() == *table).then_some(d)
    }

    /// Betti number `b_k = sum_{p+q=k} h^{p,q}`.
    pub fn betti(&self, k: usize) -> u64 {
        assert!(k <= 8);
        (0..=4usize).filter(|&p| k >= p && k - p <= 4).map(|p| u64::from(self.get(p, k - p))).sum()
    }

    /// Topological Euler number as the literal alternating sum over the full table.
    pub fn euler(&self) -> i64 {
        let table = self.expand();
        let mut e = 0i64;
        for (p, row) in table.iter().enumerate() {
            for (q, &h) in row.iter().enumerate() {
                let sign = if (p + q) % 2 == 0 { 1 } else { -1 };
                e += sign * i64::from(h);
            }
        }
        e
    }

    /// Checks the Calabi-Yau conditions `h00 = h40 = 1`, `h10 = h20 = h30 = 0`.
    pub fn cy4_violations(&self) -> Vec<Cy4Violation> {
        let mut out = Vec::new();
        if self.h00 != 1 {
            out.push(Cy4Violation { entry: "h00", expected: 1, found: self.h00 });
        }
        if self.h40 != 1 {
            out.push(Cy4Violation { entry: "h40", expected: 1, found: self.h40 });
        }
        for (entry, found) in [("h10", self.h10), ("h20", self.h20), ("h30", self.h30)] {
            if found != 0 {
                out.push(Cy4Violation { entry, expected: 0, found });
            }
        }
        out
    }
}

impl fmt::Display for HodgeDiamond4 {
    /// Prints the diamond row by row from `h^{0,0}` down to `h^{4,4}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let table = self.expand();
        let rows: Vec<Vec<String>> = (0..=8usize)
            .map(|k| {
                (0..=4usize).rev().filter(|&p| k >= p && k - p <= 4).map(|p| table[p][k - p].to_string()).collect()
            })
            .collect();
        let cell = rows.iter().flatten().map(String::len).max().unwrap_or(1);
        let width = 9 * cell;
        for (i, row) in rows.iter().enumerate() {
            let body = row.iter().map(|s| format!("{s:^cell$}")).collect::<Vec<_>>().join(&" ".repeat(cell));
            let pad = (width.saturating_sub(body.len())) / 2;
            write!(f, "{}{}", " ".repeat(pad), body.trim_end())?;
            if i < rows.len() - 1 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

/// A Calabi-Yau condition that a diamond fails.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cy4Violation {
    pub entry: &'static str,
    pub expected: u32,
    pub found: u32,
}

impl fmt::Display for Cy4Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} must be {} (found {})", self.entry, self.expected, self.found)
    }
}

/// Result of [`validate_cy4`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cy4Validation {
    pub violations: Vec<Cy4Violation>,
}

impl Cy4Validation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn euler4(d: &HodgeDiamond4) -> i64 {
    d.euler()
}

pub fn validate_cy4(d: &HodgeDiamond4) -> Cy4Validation {
    Cy4Validation { violations: d.cy4_violations() }
}

/// Hodge diamond of a Calabi-Yau 4-fold: corners are 1, `h^{i,0} = 0` for `0 < i < 4`.
///
/// Only the four free entries are carried; the full diamond is available via
/// [`diamond`](Self::diamond).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CalabiYau4Diamond {
    pub h11: u32,
    pub h21: u32,
    pub h31: u32,
    pub h22: u32,
}

impl CalabiYau4Diamond {
    pub const fn new(h11: u32, h21: u32, h31: u32, h22: u32) -> Self {
        Self { h11, h21, h31, h22 }
    }

    pub const fn diamond(&self) -> HodgeDiamond4 {
        HodgeDiamond4::new(1, 0, 0, self.h11, 0, self.h21, 1, self.h31, self.h22)
    }

    pub fn euler(&self) -> i64 {
        self.diamond().euler()
    }

    pub fn compact(&self) -> [u32; 4] {
        [self.h11, self.h21, self.h31, self.h22]
    }
}

impl TryFrom<HodgeDiamond4> for CalabiYau4Diamond {
    type Error = Vec<Cy4Violation>;

    fn try_from(d: HodgeDiamond4) -> Result<Self, Self::Error> {
        let violations = d.cy4_violations();
        if violations.is_empty() {
            Ok(Self::new(d.h11, d.h21, d.h31, d.h22))
        } else {
            Err(violations)
        }
    }
}

impl From<CalabiYau4Diamond> for HodgeDiamond4 {
    fn from(d: CalabiYau4Diamond) -> Self {
        d.diamond()
    }
}

impl fmt::Display for CalabiYau4Diamond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.h11, self.h21, self.h31, self.h22)
    }
}

/// Hodge numbers of one connected smooth surface.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SurfaceHodge {
    pub h00: u32,
    pub h10: u32,
    pub h20: u32,
    pub h11: u32,
}

impl SurfaceHodge {
    /// A connected surface (`h00 = 1`).
    pub const fn connected(h10: u32, h20: u32, h11: u32) -> Self {
        Self { h00: 1, h10, h20, h11 }
    }

    pub const P2: Self = Self::connected(0, 0, 1);
    pub const P1_X_P1: Self = Self::connected(0, 0, 2);

    /// `e = 2 h00 - 4 h10 + 2 h20 + h11`.
    pub fn euler(&self) -> i64 {
        2 * i64::from(self.h00) - 4 * i64::from(self.h10) + 2 * i64::from(self.h20) + i64::from(self.h11)
    }
}

/// Aggregated Hodge data `(b, c, d, e)` of a disjoint union of surfaces.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FixedLocusHodge {
    /// Number of components.
    pub b: u32,
    /// Sum of `h^{1,0}`.
    pub c: u32,
    /// Sum of `h^{2,0}`.
    pub d: u32,
    /// Sum of `h^{1,1}`.
    pub e: u32,
}

impl FixedLocusHodge {
    pub const fn new(b: u32, c: u32, d: u32, e: u32) -> Self {
        Self { b, c, d, e }
    }

    /// Euler number of the union, `2b - 4c + 2d + e`.
    pub fn euler(&self) -> i64 {
        2 * i64::from(self.b) - 4 * i64::from(self.c) + 2 * i64::from(self.d) + i64::from(self.e)
    }
}

pub fn sum_surface_hodge(components: &[SurfaceHodge]) -> FixedLocusHodge {
    components.iter().fold(FixedLocusHodge::default(), |acc, s| {
        debug_assert_eq!(s.h00, 1, "fixed-locus components must be connected");
        FixedLocusHodge { b: acc.b + 1, c: acc.c + s.h10, d: acc.d + s.h20, e: acc.e + s.h11 }
    })
}

/// Dimensions `t_{p,q}` of the invariant part of `H^{p,q}(V)` under the involution.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InvariantCohomology {
    pub t11: u32,
    pub t21: u32,
    pub t31: u32,
    pub t22: u32,
}

impl InvariantCohomology {
    pub const fn new(t11: u32, t21: u32, t31: u32, t22: u32) -> Self {
        Self { t11, t21, t31, t22 }
    }

    /// `dim H^4(V)^inv = 2 + 2 t31 + t22`, counting the invariant `H^{4,0}` and `H^{0,4}`.
    pub fn h4_invariant_dim(&self) -> u32 {
        2 + 2 * self.t31 + self.t22
    }
}
