//! Local analysis of a prime-order automorphism of a hyperkahler manifold at
//! a component of its fixed locus.
//!
//! A component is described by the eigenvalues `zeta_p^{a_i}` of the
//! linearisation, stored as the exponents `a_i`. A global automorphism is a
//! list of such spectra, one per fixed component.

use crate::error::{Error, Result};
use crate::Rational;
use serde::Serialize;
use std::fmt;

pub fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Eigenvalue exponents of a linearised automorphism of prime order `p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LocalSpectrum {
    p: u32,
    exponents: Vec<u32>,
}

impl LocalSpectrum {
    pub fn new(p: u32, exponents: Vec<u32>) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if let Some(&exponent) = exponents.iter().find(|&&a| a >= p) {
            return Err(Error::ExponentRange { exponent, p });
        }
        if !exponents.len().is_multiple_of(2) {
            return Err(Error::OddLength(exponents.len()));
        }
        Ok(Self { p, exponents })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Complex dimension `2n` of the ambient manifold.
    pub fn dim(&self) -> usize {
        self.exponents.len()
    }

    /// Dimension of the fixed component: the multiplicity of the eigenvalue 1.
    pub fn fixed_dim(&self) -> usize {
        self.count(0)
    }

    fn exponent_sum(&self) -> u32 {
        self.exponents.iter().sum()
    }

    fn count(&self, a: u32) -> usize {
        self.exponents.iter().filter(|&&x| x == a).count()
    }

    /// Spectrum of the `k`-th power of the generator.
    pub fn power(&self, k: u32) -> Self {
        Self { p: self.p, exponents: self.exponents.iter().map(|&a| (a * k) % self.p).collect() }
    }
}

impl fmt::Display for LocalSpectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.exponents.iter().map(u32::to_string).collect();
        write!(f, "p={} ({})", self.p, list.join(","))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SingularityClass {
    CanonicalNotTerminal,
    Terminal,
    /// Cannot occur for a volume-preserving action of prime order; kept so
    /// that [`classify`] is total.
    NonCanonical,
    SmoothPoint,
}

impl fmt::Display for SingularityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Self::CanonicalNotTerminal => "CanonicalNotTerminal",
            Self::Terminal => "Terminal",
            Self::NonCanonical => "NonCanonical",
            Self::SmoothPoint => "SmoothPoint",
        };
        f.write_str(s)
    }
}

/// `(sum a_i) / p`.
pub fn age(s: &LocalSpectrum) -> Rational {
    Rational::new(i64::from(s.exponent_sum()), i64::from(s.p))
}

/// Which local-form rule a spectrum breaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SpectrumRule {
    /// Symplectic: exponent `a` and `p - a` must pair up.
    SymplecticPairing { exponent: u32, count: usize, partner: u32, partner_count: usize },
    /// Symplectic: the eigenvalue `zeta^a` with `2a = p` (or `a = 0`) must occur an even number of times.
    SymplecticEvenMultiplicity { exponent: u32, count: usize },
    /// Non-symplectic, `p = 2`: the eigenvalue 1 must have multiplicity exactly `n`.
    LagrangianMultiplicity { found: usize, n: usize },
    /// Non-symplectic, `p` odd: exponents `a` and `p + 1 - a` must pair up
    /// (with `0` pairing against `1`).
    NonSymplecticPairing { exponent: u32, count: usize, partner: u32, partner_count: usize },
}

impl fmt::Display for SpectrumRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::SymplecticPairing { exponent, count, partner, partner_count }
            | Self::NonSymplecticPairing { exponent, count, partner, partner_count } => write!(
                f,
                "exponent {exponent} occurs {count} times but its partner {partner} occurs {partner_count} times"
            ),
            Self::SymplecticEvenMultiplicity { exponent, count } => {
                write!(f, "exponent {exponent} must have even multiplicity (found {count})")
            }
            Self::LagrangianMultiplicity { found, n } => {
                write!(f, "multiplicity of the eigenvalue 1 must be exactly n = {n} (found {found})")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpectrumValidation {
    pub violations: Vec<SpectrumRule>,
}

impl SpectrumValidation {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that a spectrum has one of the shapes allowed on a hyperkahler
/// `2n`-fold.
///
/// Symplectic: `n` pairs `(a, p - a)`, identity pairs `(0, 0)` included.
/// Non-symplectic with `p = 2`: exactly `n` eigenvalues equal to 1.
/// Non-symplectic with `p` odd: pairs `(0, 1)` or `(a, p + 1 - a)` plus any
/// number of copies of `(p + 1) / 2`.
pub fn validate_spectrum(s: &LocalSpectrum, n: usize, symplectic: bool) -> Result<SpectrumValidation> {
    if s.dim() != 2 * n {
        return Err(Error::LengthMismatch { len: s.dim(), expected: 2 * n });
    }
    let p = s.p;
    let mut violations = Vec::new();
    if symplectic {
        for a in 0..p {
            let partner = (p - a) % p;
            let count = s.count(a);
            if partner == a {
                if !count.is_multiple_of(2) {
                    violations.push(SpectrumRule::SymplecticEvenMultiplicity { exponent: a, count });
                }
            } else if a < partner {
                let partner_count = s.count(partner);
                if count != partner_count {
                    violations.push(SpectrumRule::SymplecticPairing { exponent: a, count, partner, partner_count });
                }
            }
        }
    } else if p == 2 {
        let found = s.count(0);
        if found != n {
            violations.push(SpectrumRule::LagrangianMultiplicity { found, n });
        }
    } else {
        let middle = p.div_ceil(2);
        let pairs = std::iter::once((0, 1)).chain((2..p).map(|a| (a, p + 1 - a)).filter(|&(a, b)| a < b));
        for (a, partner) in pairs {
            debug_assert_ne!(a, middle);
            let count = s.count(a);
            let partner_count = s.count(partner);
            if count != partner_count {
                violations.push(SpectrumRule::NonSymplecticPairing { exponent: a, count, partner, partner_count });
            }
        }
    }
    Ok(SpectrumValidation { violations })
}

/// Reid-Tai classification of the quotient singularity along the image of the component.
///
/// The minimum age over all nontrivial powers decides: 1 means canonical and
/// not terminal, above 1 terminal.
pub fn classify(s: &LocalSpectrum) -> Result<SingularityClass> {
    let sum = s.exponent_sum();
    if !sum.is_multiple_of(s.p) {
        return Err(Error::NotVolumePreserving { sum, p: s.p });
    }
    if s.exponents.iter().all(|&a| a == 0) {
        return Ok(SingularityClass::SmoothPoint);
    }
    let min_age = (1..s.p).map(|k| age(&s.power(k))).min().expect("p >= 2");
    let one = Rational::from_integer(1);
    Ok(match min_age.cmp(&one) {
        std::cmp::Ordering::Equal => SingularityClass::CanonicalNotTerminal,
        std::cmp::Ordering::Greater => SingularityClass::Terminal,
        std::cmp::Ordering::Less => SingularityClass::NonCanonical,
    })
}

/// Whether an automorphism of prime order `p` of a hyperkahler `2n`-fold
/// preserves the volume form. Non-symplectic ones act on it by `zeta_p^n`.
pub fn volume_preserved(p: u32, n: u32, symplectic: bool) -> Result<bool> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    Ok(symplectic || n.is_multiple_of(p))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CrepantVerdict {
    pub holds: bool,
    /// Set when no fixed component was supplied: the action is free, the
    /// quotient is already smooth, and the criterion holds vacuously.
    pub free_action: bool,
}

/// Quotient of a hyperkahler `2n`-fold by a non-symplectic automorphism of
/// order `p` is canonical and not terminal, with a crepant Calabi-Yau blow-up,
/// exactly when `p = n` and every fixed component has dimension `p`.
pub fn crepant_cy_criterion(p: u32, n: u32, fixed_component_dims: &[u32]) -> Result<CrepantVerdict> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if let Some(&dim) = fixed_component_dims.iter().find(|&&d| d > 2 * n) {
        return Err(Error::ComponentDimension { dim, max: 2 * n });
    }
    if fixed_component_dims.is_empty() {
        return Ok(CrepantVerdict { holds: true, free_action: true });
    }
    let holds = p == n && fixed_component_dims.iter().all(|&d| d == p);
    Ok(CrepantVerdict { holds, free_action: false })
}

/// Spectrum at a Lagrangian fixed component: `p` zeros and `p` ones (age 1).
pub fn lagrangian_spectrum(p: u32) -> Result<LocalSpectrum> {
    let mut exponents = vec![0; p as usize];
    exponents.extend(std::iter::repeat_n(1, p as usize));
    LocalSpectrum::new(p, exponents)
}
