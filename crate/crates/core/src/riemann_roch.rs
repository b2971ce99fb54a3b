//! Euler characteristics and `h^0` of divisors on the quotient 4-folds.
//!
//! The workhorse is the lift formula for a double cover `V -> X` branched
//! along a smooth divisor with exceptional part `Sigma` (after blowing up the
//! fixed surfaces): for an invariant divisor `D` on `V` descending to `D_X`,
//!
//! ```text
//! chi(D_X) = chi(D)/2 + (D|Sigma)^2 / 16 - chi(O_V)/2 + chi(O_X)
//! ```
//!
//! Restrictions to the fixed surfaces are computed for the only case needed
//! here: products of curves, where a class of bidegree `(d1, d2)` has
//! self-intersection `2 d1 d2`.

use crate::error::{Error, Result};
use crate::Rational;
use serde::Serialize;

/// A lattice given by its Gram matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GramLattice {
    gram: Vec<Vec<i64>>,
}

impl GramLattice {
    /// An even lattice, as for Neron-Severi lattices of K3 surfaces.
    pub fn new(gram: Vec<Vec<i64>>) -> Result<Self> {
        let lattice = Self::new_any_parity(gram)?;
        if let Some(odd) = (0..lattice.rank()).map(|i| lattice.gram[i][i]).find(|x| x % 2 != 0) {
            return Err(Error::OddDiagonal(odd));
        }
        Ok(lattice)
    }

    /// Symmetric but possibly odd lattice.
    pub fn new_any_parity(gram: Vec<Vec<i64>>) -> Result<Self> {
        let n = gram.len();
        if let Some(row) = gram.iter().find(|row| row.len() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: row.len() });
        }
        if (0..n).any(|i| (0..i).any(|j| gram[i][j] != gram[j][i])) {
            return Err(Error::NotSymmetric);
        }
        Ok(Self { gram })
    }

    pub fn rank(&self) -> usize {
        self.gram.len()
    }

    pub fn gram(&self) -> &[Vec<i64>] {
        &self.gram
    }
}

/// Integer coefficients of a divisor over the lattice basis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DivisorClass(pub Vec<i64>);

impl DivisorClass {
    pub fn new(coefficients: impl Into<Vec<i64>>) -> Self {
        Self(coefficients.into())
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

/// Bilinear form `v^T G w`.
pub fn pair(lattice: &GramLattice, v: &DivisorClass, w: &DivisorClass) -> Result<i64> {
    let n = lattice.rank();
    for class in [v, w] {
        if class.0.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: class.0.len() });
        }
    }
    Ok((0..n).flat_map(|i| (0..n).map(move |j| (i, j))).map(|(i, j)| v.0[i] * lattice.gram[i][j] * w.0[j]).sum())
}

/// Riemann-Roch on a 4-fold with `c1 = 0`: `D^4/24 + D^2 c2/24 + chi(O)`.
pub fn chi_c1_zero(d4: i64, d2c2: i64, chi_o: i64) -> Rational {
    Rational::new(d4 + d2c2, 24) + chi_o
}

/// Riemann-Roch on a K3^[2]-type 4-fold in terms of the BBF square `q`.
pub fn chi_k3type(q: i64) -> Rational {
    Rational::new((q + 4) * (q + 6), 8)
}

/// Euler characteristic of an exterior product on a product variety.
pub fn chi_box(chi1: i64, chi2: i64) -> i64 {
    chi1 * chi2
}

/// Riemann-Roch on a K3 surface: `D^2/2 + 2`.
pub fn chi_k3_surface(d2: i64) -> Result<i64> {
    if d2 % 2 != 0 {
        return Err(Error::OddSelfIntersection(d2));
    }
    Ok(d2 / 2 + 2)
}

/// Self-intersection of a class of bidegree `(d1, d2)` on a product of two curves.
pub fn sq_restriction_product(d1: i64, d2: i64) -> i64 {
    2 * d1 * d2
}

/// `(H_1 + H_2)^2` restricted to the diagonal (or the graph of the
/// involution) in `S x S`, for `H^2 = hh`.
pub fn sq_restriction_diagonal(hh: i64) -> i64 {
    4 * hh
}

/// Contribution of one of the two diagonal-type surfaces on `Z_S`: half of
/// [`sq_restriction_diagonal`].
pub fn sq_restriction_diagonal_quotient(hh: i64) -> i64 {
    sq_restriction_diagonal(hh) / 2
}

/// Euler characteristic of the descended divisor on the resolved double cover quotient.
pub fn chi_lift(chi_d: Rational, sigma_sq: i64, chi_ov: i64, chi_ox: i64) -> Rational {
    chi_d / 2 + Rational::new(sigma_sq, 16) - Rational::new(chi_ov, 2) + chi_ox
}

/// `h^0` of a nef and big invariant divisor on `S^[2]` with BBF square `hh`.
pub fn h0_hilb2(hh: i64) -> Result<i64> {
    let numerator = (hh + 4) * (hh + 6);
    if numerator % 8 != 0 {
        return Err(Error::NonIntegral(numerator));
    }
    Ok(numerator / 8)
}

/// `h^0(H_Z) = h0(H)^2 / 2 + h_Sigma / 16`.
pub fn h0_z(h0_h: i64, h_sigma_sxs: i64) -> Rational {
    Rational::new(h0_h * h0_h, 2) + Rational::new(h_sigma_sxs, 16)
}

/// `h^0(H_Y) = h0(H)^2 / 4 + h_Sigma / 32 + h_Sigma_Z / 16 + 1`.
pub fn h0_y(h0_h: i64, h_sigma_sxs: i64, h_sigma_z: i64) -> Rational {
    Rational::new(h0_h * h0_h, 4) + Rational::new(h_sigma_sxs, 32) + Rational::new(h_sigma_z, 16) + 1
}

/// One named value of a family: the transcribed number and our recomputation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FixtureValue {
    pub key: &'static str,
    pub expected: Rational,
    pub recomputed: Rational,
    pub matches: bool,
    /// `false` for printed values known not to be reproducible.
    pub hard: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyFixture {
    pub name: &'static str,
    pub lattice: GramLattice,
    pub h: DivisorClass,
    pub fixed_classes: Vec<DivisorClass>,
    pub values: Vec<FixtureValue>,
}

impl FamilyFixture {
    pub fn value(&self, key: &str) -> Option<&FixtureValue> {
        self.values.iter().find(|v| v.key == key)
    }
}

/// Geometry of a K3 family with a non-symplectic involution, enough to push
/// divisors through `S x S -> Z_S -> Y_S`.
struct Family {
    lattice: GramLattice,
    fixed: Vec<DivisorClass>,
}

impl Family {
    fn sq(&self, d: &DivisorClass) -> i64 {
        pair(&self.lattice, d, d).expect("fixture classes match the lattice rank")
    }

    fn degrees(&self, d: &DivisorClass) -> Vec<i64> {
        self.fixed.iter().map(|c| pair(&self.lattice, d, c).expect("fixture classes match the lattice rank")).collect()
    }

    fn chi_s(&self, d: &DivisorClass) -> i64 {
        chi_k3_surface(self.sq(d)).expect("K3 lattices are even")
    }

    /// `(D1 x D2)^2` restricted to the fixed surfaces `C_i x C_j` of `S x S`.
    fn sigma_sxs(&self, d1: &DivisorClass, d2: &DivisorClass) -> i64 {
        let (a, b) = (self.degrees(d1), self.degrees(d2));
        a.iter().flat_map(|x| b.iter().map(move |y| sq_restriction_product(*x, *y))).sum()
    }

    /// `chi` of the divisor on `Z_S` induced by `D1 x D2`.
    fn chi_z(&self, d1: &DivisorClass, d2: &DivisorClass) -> Rational {
        let chi = chi_box(self.chi_s(d1), self.chi_s(d2));
        chi_lift(Rational::from(chi), self.sigma_sxs(d1, d2), 4, 2)
    }

    /// Contribution of the two diagonal-type surfaces of `Z_S` for `D x D`.
    fn sigma_z(&self, d: &DivisorClass) -> i64 {
        2 * sq_restriction_diagonal_quotient(self.sq(d))
    }

    /// `chi` of the divisor on `Y_S` induced by `D x D`.
    fn chi_y(&self, d: &DivisorClass) -> Rational {
        chi_lift(self.chi_z(d, d), self.sigma_z(d), 2, 2)
    }
}

fn value(key: &'static str, expected: i64, recomputed: Rational, hard: bool) -> FixtureValue {
    let expected = Rational::from(expected);
    FixtureValue { key, expected, recomputed, matches: expected == recomputed, hard }
}

fn int(x: i64) -> Rational {
    Rational::from(x)
}

fn deg2() -> FamilyFixture {
    let lattice = GramLattice::new(vec![vec![2]]).expect("even lattice");
    let h = DivisorClass::new([1]);
    let fam = Family { lattice: lattice.clone(), fixed: vec![DivisorClass::new([3])] };
    let hh = fam.sq(&h);
    let h0_s = fam.chi_s(&h);
    let h_sigma = fam.sigma_sxs(&h, &h);
    let h_sigma_z = fam.sigma_z(&h);
    let h0_zv = h0_z(h0_s, h_sigma);
    let values = vec![
        value("h0_S", 3, int(h0_s), true),
        value("h0_S2", 6, int(h0_hilb2(hh).expect("even square")), true),
        value("h0_Z", 9, h0_zv, true),
        value("h0_Y", 6, h0_y(h0_s, h_sigma, h_sigma_z), true),
        value("hSigma", 72, int(h_sigma), true),
        value("hSigma_Z", 8, int(h_sigma_z), true),
    ];
    FamilyFixture { name: "deg2", lattice, h, fixed_classes: fam.fixed, values }
}

fn u2() -> FamilyFixture {
    let lattice = GramLattice::new(vec![vec![0, 2], vec![2, 0]]).expect("even lattice");
    let (l, m) = (DivisorClass::new([1, 0]), DivisorClass::new([0, 1]));
    let zero = DivisorClass::new([0, 0]);
    let h = l.add(&m);
    let fam = Family { lattice: lattice.clone(), fixed: vec![DivisorClass::new([2, 2])] };
    let hh = fam.sq(&h);
    let h0_s = fam.chi_s(&h);
    let h_sigma = fam.sigma_sxs(&h, &h);
    let h_sigma_z = fam.sigma_z(&h);
    let values = vec![
        value("h0_S2", 10, int(h0_hilb2(hh).expect("even square")), true),
        value("h0_Z", 16, h0_z(h0_s, h_sigma), true),
        value("h0_Y", 10, h0_y(h0_s, h_sigma, h_sigma_z), true),
        value("chi(l_S2)", 3, chi_k3type(fam.sq(&l)), true),
        value("chi(l_1Z)", 2, fam.chi_z(&l, &zero), true),
        value("chi(H_1Z)", 4, fam.chi_z(&h, &zero), true),
        value("chi(l_Z)", 2, fam.chi_z(&l, &l), false),
        value("chi(l_Z+m_1Z)", 8, fam.chi_z(&h, &l), true),
        value("chi(l_Y)", 2, fam.chi_y(&l), false),
    ];
    FamilyFixture { name: "U2", lattice, h, fixed_classes: fam.fixed, values }
}

fn u() -> FamilyFixture {
    let lattice = GramLattice::new(vec![vec![0, 1], vec![1, -2]]).expect("even lattice");
    let f = DivisorClass::new([1, 0]);
    let h = DivisorClass::new([4, 2]);
    let fam = Family { lattice: lattice.clone(), fixed: vec![DivisorClass::new([0, 1]), DivisorClass::new([6, 3])] };
    let hh = fam.sq(&h);
    let chi_f = fam.chi_s(&f);
    let values = vec![
        value("h0_S2", 21, int(h0_hilb2(hh).expect("even square")), true),
        value("chi(F_Z)", 4, fam.chi_z(&f, &f), true),
        value("chi(F_Y)", 3, h0_y(chi_f, fam.sigma_sxs(&f, &f), fam.sigma_z(&f)), true),
        value("chi(F_S2)", 3, chi_k3type(fam.sq(&f)), true),
    ];
    FamilyFixture { name: "U", lattice, h, fixed_classes: fam.fixed, values }
}

/// The three worked K3 families with transcribed and recomputed values.
pub fn family_fixtures() -> Vec<FamilyFixture> {
    vec![deg2(), u2(), u()]
}

/// Second route for `chi(F_Y)` in the `U` family, through `Z_S`.
pub fn u_family_chi_f_y_via_z() -> Rational {
    let lattice = GramLattice::new(vec![vec![0, 1], vec![1, -2]]).expect("even lattice");
    let fam = Family { lattice, fixed: vec![DivisorClass::new([0, 1]), DivisorClass::new([6, 3])] };
    fam.chi_y(&DivisorClass::new([1, 0]))
}
