//! Closed-form two-point gap families on the catalog curves, plus a verifier
//! that replays every family instance through both c-gap routes.
//!
//! Each family is a pure generator (parameters in, a concrete claim out);
//! generators never consult the dimension engine, so verification is a
//! genuine cross-check. Parameter ranges are part of the claims: out-of-range
//! input is a hard error, never clamped.

use crate::arith::{mul, pow};
use crate::catalog::{self, CatalogCurve};
use crate::kummer::{CGapQuery, KummerCurve, PlaceHandle};
use crate::Error;
use serde::Serialize;

/// Family identifiers; these are also the CLI vocabulary for `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyId {
    Prop34,
    Prop35,
    Prop36,
    Prop37,
    Prop38,
    Prop39,
    Prop310,
}

pub const ALL_FAMILIES: [FamilyId; 7] = [
    FamilyId::Prop34,
    FamilyId::Prop35,
    FamilyId::Prop36,
    FamilyId::Prop37,
    FamilyId::Prop38,
    FamilyId::Prop39,
    FamilyId::Prop310,
];

impl std::fmt::Display for FamilyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FamilyId {
    pub fn as_str(self) -> &'static str {
        match self {
            FamilyId::Prop34 => "prop34",
            FamilyId::Prop35 => "prop35",
            FamilyId::Prop36 => "prop36",
            FamilyId::Prop37 => "prop37",
            FamilyId::Prop38 => "prop38",
            FamilyId::Prop39 => "prop39",
            FamilyId::Prop310 => "prop310",
        }
    }
}

impl std::str::FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        ALL_FAMILIES
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| Error::BadParameter(format!("unknown family: {s}")))
    }
}

/// What an instance asserts about its tuple.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GapClaim {
    /// The tuple is a pure gap.
    PureGap,
    /// The tuple is a c-gap (for the instance's c) but not a pure gap.
    CGapNotPure,
    /// The tuple is not a pure gap (the negative direction of an iff).
    NotPureGap,
}

/// One concrete claim: a tuple at named places on a catalog curve.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyInstance {
    pub family: FamilyId,
    pub params: Vec<(String, i128)>,
    /// Symbolic place selectors, resolved against the catalog curve.
    pub places: Vec<String>,
    pub n: Vec<i128>,
    pub c: Vec<i128>,
    pub claim: GapClaim,
}

fn check_range(what: &'static str, value: i128, lo: i128, hi: i128) -> Result<(), Error> {
    if value < lo || value > hi {
        return Err(Error::ParamOutOfRange {
            what,
            value,
            lo,
            hi,
        });
    }
    Ok(())
}

/// GK family: (1 + a(q^3+1) + b(q^2-q+1),
/// q^5 - 3q^3 + 2q^2 - q - 1 - a(q^3+1) - b(q^2-q+1)) is a pure gap at two
/// zeros of x^q+x, for a in [0, q^2-3] and b in {0, 1}. The coordinate sum
/// is constant over the family.
pub fn prop34(q: i128, alpha: i128, beta: i128) -> Result<FamilyInstance, Error> {
    if q < 2 {
        return Err(Error::BadParameter(format!("q = {q} must be >= 2")));
    }
    check_range("alpha", alpha, 0, q * q - 3)?;
    check_range("beta", beta, 0, 1)?;
    let q3p1 = pow(q, 3) + 1;
    let period = q * q - q + 1;
    let n1 = 1 + mul(alpha, q3p1) + beta * period;
    let n2 = pow(q, 5) - 3 * pow(q, 3) + 2 * q * q - q - 1 - mul(alpha, q3p1) - beta * period;
    Ok(FamilyInstance {
        family: FamilyId::Prop34,
        params: vec![("alpha".into(), alpha), ("beta".into(), beta)],
        places: vec!["P1".into(), "P2".into()],
        n: vec![n1, n2],
        c: vec![1, 1],
        claim: GapClaim::PureGap,
    })
}

/// GK family: (1, 2g-2) is a (1,0)-gap but not a pure gap at two zeros of
/// x^q+x.
pub fn prop35(q: i128) -> Result<FamilyInstance, Error> {
    if q < 2 {
        return Err(Error::BadParameter(format!("q = {q} must be >= 2")));
    }
    let two_g_minus_2 = mul(pow(q, 3) + 1, q * q - 2);
    Ok(FamilyInstance {
        family: FamilyId::Prop35,
        params: vec![],
        places: vec!["P1".into(), "P2".into()],
        n: vec![1, two_g_minus_2],
        c: vec![1, 0],
        claim: GapClaim::CGapNotPure,
    })
}

/// Per-index parameters for the GK box family: n = a(q^3+1) + b(q^2-q+1) + g
/// with a in [0, q^2-2], b in [0, q], g in [1, q^2-q].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Prop36Params {
    pub alpha: i128,
    pub beta: i128,
    pub gamma: i128,
}

fn prop36_check(q: i128, p: Prop36Params) -> Result<(), Error> {
    if q < 2 {
        return Err(Error::BadParameter(format!("q = {q} must be >= 2")));
    }
    check_range("alpha", p.alpha, 0, q * q - 2)?;
    check_range("beta", p.beta, 0, q)?;
    check_range("gamma", p.gamma, 1, q * q - q)?;
    Ok(())
}

/// Closed-form purity test for the GK box family.
///
/// With K_i = b_i(q^2-q+1) + g_i and delta_{i,j} = [K_i <= K_j], the pair is
/// a pure gap iff for each index i (j the other one):
///
/// ```text
/// b_i + g_i < q^2 - a_1 - a_2 - delta_{i,j}
/// ```
///
/// Equivalently: at the unique power t where the i-th floor jumps, the
/// restricted degree a_1 + a_2 + 1 + delta_{i,j} + (q^2-q)(q-b_i) - t must go
/// negative. (A symmetric-looking weakening of this bound by one unit fails
/// on boundary tuples; the per-index form is exact, verified exhaustively
/// against the dimension oracle for q = 2 and q = 3.)
pub fn prop36_predicate(q: i128, p1: Prop36Params, p2: Prop36Params) -> Result<bool, Error> {
    prop36_check(q, p1)?;
    prop36_check(q, p2)?;
    let period = q * q - q + 1;
    let k1 = p1.beta * period + p1.gamma;
    let k2 = p2.beta * period + p2.gamma;
    let d12: i128 = (k1 <= k2).into();
    let d21: i128 = (k2 <= k1).into();
    let budget = q * q - p1.alpha - p2.alpha;
    Ok(p1.beta + p1.gamma < budget - d12 && p2.beta + p2.gamma < budget - d21)
}

/// The GK box family instance: claims pure exactly when the predicate holds.
pub fn prop36_pair(q: i128, p1: Prop36Params, p2: Prop36Params) -> Result<FamilyInstance, Error> {
    let pure = prop36_predicate(q, p1, p2)?;
    let q3p1 = pow(q, 3) + 1;
    let period = q * q - q + 1;
    let n1 = mul(p1.alpha, q3p1) + p1.beta * period + p1.gamma;
    let n2 = mul(p2.alpha, q3p1) + p2.beta * period + p2.gamma;
    Ok(FamilyInstance {
        family: FamilyId::Prop36,
        params: vec![
            ("alpha1".into(), p1.alpha),
            ("beta1".into(), p1.beta),
            ("gamma1".into(), p1.gamma),
            ("alpha2".into(), p2.alpha),
            ("beta2".into(), p2.beta),
            ("gamma2".into(), p2.gamma),
        ],
        places: vec!["P1".into(), "P2".into()],
        n: vec![n1, n2],
        c: vec![1, 1],
        claim: if pure {
            GapClaim::PureGap
        } else {
            GapClaim::NotPureGap
        },
    })
}

/// 𝒳₁ family with m = q^n + 1 and q even, at (P_inf, P1):
/// part (i): (1, (q^n-2)(q^n+1)) is a (1,0)-gap but not pure;
/// part (ii): (1, (q^n-3)(q^n+1) + a) is pure for a in {1, 2}.
/// Returns (part i, part ii). Rejects q^n = 2, where part (ii)'s leading
/// coefficient would go negative.
pub fn prop37(q: i128, n: i128, alpha: i128) -> Result<(FamilyInstance, FamilyInstance), Error> {
    if q < 2 || q % 2 != 0 {
        return Err(Error::BadParameter(format!("q = {q} must be even")));
    }
    if n < 1 {
        return Err(Error::BadParameter(format!("n = {n} must be >= 1")));
    }
    check_range("alpha", alpha, 1, 2)?;
    let qn = pow(q, n as u32);
    if qn - 3 < 0 {
        return Err(Error::BadParameter(format!(
            "q^n = {qn}: the coefficient q^n - 3 would be negative"
        )));
    }
    let part_i = FamilyInstance {
        family: FamilyId::Prop37,
        params: vec![("part".into(), 1)],
        places: vec!["P_inf".into(), "P1".into()],
        n: vec![1, mul(qn - 2, qn + 1)],
        c: vec![1, 0],
        claim: GapClaim::CGapNotPure,
    };
    let part_ii = FamilyInstance {
        family: FamilyId::Prop37,
        params: vec![("part".into(), 2), ("alpha".into(), alpha)],
        places: vec!["P_inf".into(), "P1".into()],
        n: vec![1, mul(qn - 3, qn + 1) + alpha],
        c: vec![1, 1],
        claim: GapClaim::PureGap,
    };
    Ok((part_i, part_ii))
}

/// 𝒳₂ family with m = q^2 - 1 and q > 3:
/// (q-1 + a(q^2-1) + bq, 2q^3 - 5q^2 + 4 - a(q^2-1) - bq) is a pure gap at
/// two totally ramified zeros of x^{q+1}+x+1, for a in [0, 2q-5], b in {0,1}.
pub fn prop38(q: i128, alpha: i128, beta: i128) -> Result<FamilyInstance, Error> {
    if q <= 3 {
        return Err(Error::BadParameter(format!("q = {q} must exceed 3")));
    }
    check_range("alpha", alpha, 0, 2 * q - 5)?;
    check_range("beta", beta, 0, 1)?;
    let m = q * q - 1;
    let n1 = q - 1 + mul(alpha, m) + beta * q;
    let n2 = 2 * pow(q, 3) - 5 * q * q + 4 - mul(alpha, m) - beta * q;
    Ok(FamilyInstance {
        family: FamilyId::Prop38,
        params: vec![("alpha".into(), alpha), ("beta".into(), beta)],
        places: vec!["P1".into(), "P2".into()],
        n: vec![n1, n2],
        c: vec![1, 1],
        claim: GapClaim::PureGap,
    })
}

/// GGS family for odd n >= 5, at two zeros of x^q+x:
/// n1 = (b+1) q^{n-3} (q^2-q+1) + a(q^n+1) and
/// n2 = (q^2-3)(q^n+1) + 3 q^{n-3} (q^2-q+1) - n1, a pure gap for
/// a in [0, q^2-3], b in {0, 1}.
pub fn prop39(q: i128, n: i128, alpha: i128, beta: i128) -> Result<FamilyInstance, Error> {
    if q < 2 {
        return Err(Error::BadParameter(format!("q = {q} must be >= 2")));
    }
    if n < 5 || n % 2 == 0 {
        return Err(Error::BadParameter(format!("n = {n} must be odd and >= 5")));
    }
    check_range("alpha", alpha, 0, q * q - 3)?;
    check_range("beta", beta, 0, 1)?;
    let qn = pow(q, n as u32);
    let block = mul(pow(q, (n - 3) as u32), q * q - q + 1);
    let n1 = (beta + 1) * block + mul(alpha, qn + 1);
    let n2 = mul(q * q - 3, qn + 1) + 3 * block - n1;
    Ok(FamilyInstance {
        family: FamilyId::Prop39,
        params: vec![("alpha".into(), alpha), ("beta".into(), beta)],
        places: vec!["P1".into(), "P2".into()],
        n: vec![n1, n2],
        c: vec![1, 1],
        claim: GapClaim::PureGap,
    })
}

/// GGS family for odd n >= 3, pairing a zero of x^q+x with the pole:
/// (1 + a(q^n+1)) at P1 together with
/// (q^2-2-a)(q^n+1) + q^n - 2q^3 + 1 at P_inf is a pure gap, for
/// a in [0, q^2-2]. (The floor computation puts the small coordinate at a
/// zero of x^q+x — its multiplicity is 1 — and the large one at the pole.)
/// Rejects parameters that would push the pole coordinate below zero.
pub fn prop310(q: i128, n: i128, alpha: i128) -> Result<FamilyInstance, Error> {
    if q < 2 {
        return Err(Error::BadParameter(format!("q = {q} must be >= 2")));
    }
    if n < 3 || n % 2 == 0 {
        return Err(Error::BadParameter(format!("n = {n} must be odd and >= 3")));
    }
    check_range("alpha", alpha, 0, q * q - 2)?;
    let qn = pow(q, n as u32);
    let n1 = 1 + mul(alpha, qn + 1);
    let n2 = 1 + mul(q * q - 2, qn + 1) + qn - 2 * pow(q, 3) + 1 - n1;
    if n2 < 0 {
        return Err(Error::Negative {
            what: "n2",
            value: n2,
        });
    }
    Ok(FamilyInstance {
        family: FamilyId::Prop310,
        params: vec![("alpha".into(), alpha)],
        places: vec!["P1".into(), "P_inf".into()],
        n: vec![n1, n2],
        c: vec![1, 1],
        claim: GapClaim::PureGap,
    })
}

/// Builds the catalog curve a family lives on and every instance in the
/// family's stated parameter range, ordered lexicographically by parameters.
pub fn family_instances(
    family: FamilyId,
    q: i128,
    n: Option<i128>,
) -> Result<(CatalogCurve, Vec<FamilyInstance>), Error> {
    let need_n = |what: &str| {
        n.ok_or_else(|| Error::BadParameter(format!("{what} requires the tower exponent n")))
    };
    match family {
        FamilyId::Prop34 => {
            let cat = catalog::gk(q)?;
            let mut out = Vec::new();
            for alpha in 0..=q * q - 3 {
                for beta in 0..=1 {
                    out.push(prop34(q, alpha, beta)?);
                }
            }
            Ok((cat, out))
        }
        FamilyId::Prop35 => Ok((catalog::gk(q)?, vec![prop35(q)?])),
        FamilyId::Prop36 => {
            let cat = catalog::gk(q)?;
            let mut out = Vec::new();
            let mut sides = Vec::new();
            for alpha in 0..=q * q - 2 {
                for beta in 0..=q {
                    for gamma in 1..=q * q - q {
                        sides.push(Prop36Params { alpha, beta, gamma });
                    }
                }
            }
            for &p1 in &sides {
                for &p2 in &sides {
                    out.push(prop36_pair(q, p1, p2)?);
                }
            }
            Ok((cat, out))
        }
        FamilyId::Prop37 => {
            let n = need_n("prop37")?;
            let m = pow(q, n as u32) + 1;
            let cat = catalog::x1(q, n, m)?;
            let (part_i, part_ii_1) = prop37(q, n, 1)?;
            let (_, part_ii_2) = prop37(q, n, 2)?;
            Ok((cat, vec![part_i, part_ii_1, part_ii_2]))
        }
        FamilyId::Prop38 => {
            let cat = catalog::x2(q, q * q - 1)?;
            let mut out = Vec::new();
            for alpha in 0..=2 * q - 5 {
                for beta in 0..=1 {
                    out.push(prop38(q, alpha, beta)?);
                }
            }
            Ok((cat, out))
        }
        FamilyId::Prop39 => {
            let n = need_n("prop39")?;
            let cat = catalog::ggs(q, n)?;
            let mut out = Vec::new();
            for alpha in 0..=q * q - 3 {
                for beta in 0..=1 {
                    out.push(prop39(q, n, alpha, beta)?);
                }
            }
            Ok((cat, out))
        }
        FamilyId::Prop310 => {
            let n = need_n("prop310")?;
            let cat = catalog::ggs(q, n)?;
            let mut out = Vec::new();
            for alpha in 0..=q * q - 2 {
                out.push(prop310(q, n, alpha)?);
            }
            Ok((cat, out))
        }
    }
}

/// Whether a family's claims are asserted (CI-failing) at these parameters.
/// The 𝒳₂ family is asserted only for q = 1 (mod 3), the case whose
/// ramification multiset comes from a worked computation; other residues run
/// informationally.
pub fn family_asserting(family: FamilyId, q: i128) -> bool {
    match family {
        FamilyId::Prop38 => q % 3 == 1,
        _ => true,
    }
}

/// Outcome of replaying one instance through both routes.
#[derive(Clone, Debug, Serialize)]
pub struct InstanceResult {
    #[serde(flatten)]
    pub instance: FamilyInstance,
    /// Claim evaluated through the floor criterion.
    pub criterion_result: bool,
    /// Claim evaluated through the dimension definition.
    pub oracle_result: bool,
    pub pass: bool,
}

/// Verification report for one family at one parameter set.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyReport {
    pub family: FamilyId,
    pub q: i128,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<i128>,
    pub curve: String,
    pub curve_notes: Vec<String>,
    /// False when the run is informational (claims recorded, not asserted).
    pub asserting: bool,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub results: Vec<InstanceResult>,
}

#[derive(Clone, Copy)]
enum Route {
    Criterion,
    Oracle,
}

fn c_gap(
    curve: &KummerCurve,
    places: &[PlaceHandle],
    n: &[i128],
    c: &[i128],
    route: Route,
) -> Result<bool, Error> {
    let query = CGapQuery::new(curve, places.to_vec(), n.to_vec(), c.to_vec())?;
    match route {
        Route::Criterion => curve.is_c_gap_criterion(&query),
        Route::Oracle => curve.is_c_gap_by_def(&query),
    }
}

fn claim_holds(
    curve: &KummerCurve,
    places: &[PlaceHandle],
    inst: &FamilyInstance,
    route: Route,
) -> Result<bool, Error> {
    let ones = vec![1i128; inst.n.len()];
    match inst.claim {
        GapClaim::PureGap => c_gap(curve, places, &inst.n, &ones, route),
        GapClaim::CGapNotPure => Ok(c_gap(curve, places, &inst.n, &inst.c, route)?
            && !c_gap(curve, places, &inst.n, &ones, route)?),
        GapClaim::NotPureGap => Ok(!c_gap(curve, places, &inst.n, &ones, route)?),
    }
}

/// Replays a family's full parameter range through the criterion and the
/// dimension oracle; an instance passes only when both routes confirm its
/// claim.
pub fn verify_family(family: FamilyId, q: i128, n: Option<i128>) -> Result<FamilyReport, Error> {
    let (cat, instances) = family_instances(family, q, n)?;
    let mut results = Vec::with_capacity(instances.len());
    let mut passed = 0usize;
    for inst in instances {
        let places: Vec<PlaceHandle> = inst
            .places
            .iter()
            .map(|s| cat.resolve_place(s))
            .collect::<Result<_, _>>()?;
        let criterion_result = claim_holds(&cat.curve, &places, &inst, Route::Criterion)?;
        let oracle_result = claim_holds(&cat.curve, &places, &inst, Route::Oracle)?;
        let pass = criterion_result && oracle_result;
        if pass {
            passed += 1;
        }
        results.push(InstanceResult {
            instance: inst,
            criterion_result,
            oracle_result,
            pass,
        });
    }
    Ok(FamilyReport {
        family,
        q,
        n,
        curve: cat.describe(),
        curve_notes: cat.notes.clone(),
        asserting: family_asserting(family, q),
        total: results.len(),
        passed,
        failed: results.len() - passed,
        results,
    })
}
