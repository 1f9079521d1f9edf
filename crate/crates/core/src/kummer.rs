//! Dimension engine for Kummer covers `y^m = f(x)` over an algebraically
//! closed constant field.
//!
//! The model is valuation-only: `f` is known through the multiset of its
//! zero/pole multiplicities, one [`RamificationClass`] per multiplicity value
//! and role. A place of the rational function field carrying multiplicity λ
//! splits into gcd(m, |λ|) places upstairs; it is *totally ramified* when
//! that gcd is 1. Divisors supported on totally ramified places are invariant
//! under the cover's Galois group, so their Riemann-Roch space decomposes
//! into m genus-zero pieces, one per power of `y`:
//!
//! ```text
//! l(D) = sum over t in 0..m of max(0, 1 + deg_t),
//! deg_t = sum_i floor((n_i + t*lambda_i)/m)        (selected places)
//!       + sum_Q floor(t*lambda_Q/m)                (every other place of K(x)
//!                                                   below the support of y)
//! ```
//!
//! Every predicate in this module — c-gaps, pure gaps, semigroup membership,
//! gap sets — is a statement about these floor sums. Two independent routes
//! are provided for c-gaps: [`KummerCurve::is_c_gap_by_def`] compares two
//! dimensions, [`KummerCurve::is_c_gap_criterion`] checks the per-t floor
//! conditions; they must agree everywhere.

use crate::arith::{add, floor_div, gcd, mul};
use crate::Error;
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// One zero/pole class of f(x): all places of K(x) where v(f) equals
/// `lambda`, together with how many such places there are.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamificationClass {
    /// Free-text tag carried through reports (e.g. `"zeros of x^q+x"`).
    pub label: String,
    /// Valuation of f at each place of the class; never 0.
    pub lambda: i128,
    /// Number of places sharing this valuation.
    pub count: u64,
}

/// A Kummer cover described by its exponent m and ramification multiset.
///
/// `char_p` is carried for validation only (the model requires p ∤ m); no
/// field arithmetic happens anywhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KummerCurve {
    pub m: i128,
    pub char_p: i128,
    pub classes: Vec<RamificationClass>,
}

/// A place upstairs, identified by class and occurrence within the class.
///
/// Only places above totally ramified classes can carry divisor
/// coefficients; for those the place upstairs is unique, so the handle is
/// really naming the underlying place of K(x).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct PlaceHandle {
    pub class: usize,
    pub index: u64,
}

/// A c-gap question: is `n` unchanged, dimension-wise, by subtracting `c`?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CGapQuery {
    pub places: Vec<PlaceHandle>,
    pub n: Vec<i128>,
    pub c: Vec<i128>,
}

impl CGapQuery {
    /// Builds a validated query: s >= 1, matching lengths, pairwise distinct
    /// places in totally ramified classes, and non-negative n and c.
    pub fn new(
        curve: &KummerCurve,
        places: Vec<PlaceHandle>,
        n: Vec<i128>,
        c: Vec<i128>,
    ) -> Result<Self, Error> {
        if places.is_empty() {
            return Err(Error::BadParameter("query needs at least one place".into()));
        }
        if n.len() != places.len() {
            return Err(Error::LengthMismatch {
                expected: places.len(),
                got: n.len(),
            });
        }
        if c.len() != places.len() {
            return Err(Error::LengthMismatch {
                expected: places.len(),
                got: c.len(),
            });
        }
        curve.check_places(&places)?;
        for &v in &n {
            if v < 0 {
                return Err(Error::Negative {
                    what: "n",
                    value: v,
                });
            }
        }
        for &v in &c {
            if v < 0 {
                return Err(Error::Negative {
                    what: "c",
                    value: v,
                });
            }
        }
        Ok(CGapQuery { places, n, c })
    }
}

/// Restricted-divisor degree data for one power of y.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FloorSum {
    /// Degree of the restriction of `sum n_i P_i + (y^t)` to K(x).
    pub total: i128,
    /// The floor term of each selected place, in query order.
    pub per_place: Vec<i128>,
}

/// Violations reported by [`KummerCurve::validate`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum CurveViolation {
    /// m < 2.
    ExponentTooSmall { m: i128 },
    /// char_p is not a prime.
    CharacteristicNotPrime { p: i128 },
    /// p divides m (the cover would be inseparable).
    CharacteristicDividesExponent { p: i128, m: i128 },
    /// Some class has lambda = 0 (not in the support of f).
    ZeroMultiplicity { class: usize },
    /// Some class has count = 0.
    EmptyClass { class: usize },
    /// sum of lambda*count != 0 (f must have a degree-zero divisor).
    DegreeSumNonzero { sum: i128 },
    /// gcd(m, all lambdas) = d > 1: f is a d-th power, so y^m = f does not
    /// define a degree-m extension and the formulas would misapply.
    ReducibleModel { d: i128 },
}

impl std::fmt::Display for CurveViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CurveViolation::ExponentTooSmall { m } => write!(f, "m = {m} < 2"),
            CurveViolation::CharacteristicNotPrime { p } => {
                write!(f, "char_p = {p} is not prime")
            }
            CurveViolation::CharacteristicDividesExponent { p, m } => {
                write!(f, "characteristic {p} divides m = {m}")
            }
            CurveViolation::ZeroMultiplicity { class } => {
                write!(f, "class {class} has lambda = 0")
            }
            CurveViolation::EmptyClass { class } => write!(f, "class {class} has count = 0"),
            CurveViolation::DegreeSumNonzero { sum } => {
                write!(f, "degree sum of (f) is {sum}, expected 0")
            }
            CurveViolation::ReducibleModel { d } => {
                write!(
                    f,
                    "gcd(m, all lambda) = {d} > 1: y^m = f is not a degree-m model"
                )
            }
        }
    }
}

/// Pass/fail outcome of curve validation with the violations found.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<CurveViolation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl KummerCurve {
    /// Parses a curve from the curve-spec JSON format
    /// `{"m": .., "char_p": .., "classes": [{"label", "lambda", "count"}, ..]}`
    /// and validates it.
    pub fn from_json(s: &str) -> Result<Self, Error> {
        let curve: KummerCurve = serde_json::from_str(s)?;
        let report = curve.validate();
        if !report.is_ok() {
            let msgs: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
            return Err(Error::InvalidCurve(msgs.join("; ")));
        }
        Ok(curve)
    }

    /// Serializes to the curve-spec JSON format.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("curve serialization cannot fail")
    }

    /// Checks the model hypotheses, reporting every violation found.
    pub fn validate(&self) -> ValidationReport {
        let mut v = Vec::new();
        if self.m < 2 {
            v.push(CurveViolation::ExponentTooSmall { m: self.m });
        }
        if !is_prime(self.char_p) {
            v.push(CurveViolation::CharacteristicNotPrime { p: self.char_p });
        } else if self.m >= 2 && self.m % self.char_p == 0 {
            v.push(CurveViolation::CharacteristicDividesExponent {
                p: self.char_p,
                m: self.m,
            });
        }
        let mut sum = 0i128;
        let mut lambda_gcd = 0i128;
        for (i, cl) in self.classes.iter().enumerate() {
            if cl.lambda == 0 {
                v.push(CurveViolation::ZeroMultiplicity { class: i });
            }
            if cl.count == 0 {
                v.push(CurveViolation::EmptyClass { class: i });
            }
            sum = add(sum, mul(cl.lambda, cl.count as i128));
            lambda_gcd = gcd(lambda_gcd, cl.lambda);
        }
        if sum != 0 {
            v.push(CurveViolation::DegreeSumNonzero { sum });
        }
        if self.m >= 2 && !self.classes.is_empty() {
            let d = gcd(self.m, lambda_gcd);
            if d > 1 {
                v.push(CurveViolation::ReducibleModel { d });
            }
        }
        ValidationReport { violations: v }
    }

    /// True when the class's places are totally ramified in the cover.
    pub fn is_totally_ramified_class(&self, class: usize) -> bool {
        gcd(self.m, self.classes[class].lambda) == 1
    }

    /// Bounds-checked handle for the `index`-th place of a class.
    pub fn place(&self, class: usize, index: u64) -> Result<PlaceHandle, Error> {
        if class >= self.classes.len() || index >= self.classes[class].count {
            return Err(Error::PlaceOutOfRange { class, index });
        }
        Ok(PlaceHandle { class, index })
    }

    /// Genus from the ramification data:
    /// 2g - 2 = -2m + sum over classes of count * (m - gcd(m, |lambda|)).
    pub fn genus(&self) -> Result<i128, Error> {
        let mut two_g_minus_2 = mul(-2, self.m);
        for cl in &self.classes {
            let d = gcd(self.m, cl.lambda);
            two_g_minus_2 = add(two_g_minus_2, mul(cl.count as i128, self.m - d));
        }
        if two_g_minus_2 % 2 != 0 {
            return Err(Error::CorruptCurve(format!(
                "2g-2 = {two_g_minus_2} is odd"
            )));
        }
        let g = two_g_minus_2 / 2 + 1;
        if g < 0 {
            return Err(Error::CorruptCurve(format!("genus {g} is negative")));
        }
        Ok(g)
    }

    fn check_places(&self, places: &[PlaceHandle]) -> Result<(), Error> {
        for (i, p) in places.iter().enumerate() {
            if p.class >= self.classes.len() || p.index >= self.classes[p.class].count {
                return Err(Error::PlaceOutOfRange {
                    class: p.class,
                    index: p.index,
                });
            }
            if !self.is_totally_ramified_class(p.class) {
                return Err(Error::NotTotallyRamified { class: p.class });
            }
            if places[..i].contains(p) {
                return Err(Error::DuplicatePlace);
            }
        }
        Ok(())
    }

    /// Per-class count of selected places, used to subtract the selected
    /// places from their classes' background contribution.
    fn selected_per_class(&self, places: &[PlaceHandle]) -> Vec<u64> {
        let mut sel = vec![0u64; self.classes.len()];
        for p in places {
            sel[p.class] += 1;
        }
        sel
    }

    /// Degree of the restriction of `sum n_i P_i + (y^t)` to K(x), without
    /// the per-place breakdown. `sel` must come from [`Self::selected_per_class`].
    fn restricted_total(&self, places: &[PlaceHandle], n: &[i128], sel: &[u64], t: i128) -> i128 {
        let m = self.m;
        let mut total = 0i128;
        for (p, &ni) in places.iter().zip(n) {
            let lambda = self.classes[p.class].lambda;
            total = add(total, floor_div(add(ni, mul(t, lambda)), m));
        }
        // Every unselected place of K(x) below the support of y contributes
        // floor(t*lambda/m), one term per underlying place.
        for (cl, &s) in self.classes.iter().zip(sel) {
            let unselected = cl.count - s;
            if unselected > 0 {
                total = add(
                    total,
                    mul(unselected as i128, floor_div(mul(t, cl.lambda), m)),
                );
            }
        }
        total
    }

    /// The restricted-divisor degree for `sum n_i P_i + (y^t)` together with
    /// the floor term of each selected place.
    ///
    /// `t` must lie in `[0, m-1]`; coefficients may be any integers.
    pub fn restricted_floor_sum(
        &self,
        places: &[PlaceHandle],
        n: &[i128],
        t: i128,
    ) -> Result<FloorSum, Error> {
        if t < 0 || t >= self.m {
            return Err(Error::TOutOfRange { t, max: self.m - 1 });
        }
        if n.len() != places.len() {
            return Err(Error::LengthMismatch {
                expected: places.len(),
                got: n.len(),
            });
        }
        self.check_places(places)?;
        let sel = self.selected_per_class(places);
        let per_place: Vec<i128> = places
            .iter()
            .zip(n)
            .map(|(p, &ni)| floor_div(add(ni, mul(t, self.classes[p.class].lambda)), self.m))
            .collect();
        let total = self.restricted_total(places, n, &sel, t);
        Ok(FloorSum { total, per_place })
    }

    /// Riemann-Roch dimension of a divisor supported on totally ramified
    /// places. Coefficients may be negative (needed for the membership test
    /// l(D - P_j) and for c > n queries).
    pub fn rr_dim(&self, coeffs: &[(PlaceHandle, i128)]) -> Result<i128, Error> {
        let places: Vec<PlaceHandle> = coeffs.iter().map(|&(p, _)| p).collect();
        let n: Vec<i128> = coeffs.iter().map(|&(_, v)| v).collect();
        self.check_places(&places)?;
        let sel = self.selected_per_class(&places);
        let mut dim = 0i128;
        for t in 0..self.m {
            let deg = self.restricted_total(&places, &n, &sel, t);
            if deg >= 0 {
                dim += deg + 1;
            }
        }
        Ok(dim)
    }

    /// c-gap test by definition: l(sum (n_i - c_i) P_i) = l(sum n_i P_i).
    ///
    /// This is the oracle route; it computes both dimensions in full.
    pub fn is_c_gap_by_def(&self, query: &CGapQuery) -> Result<bool, Error> {
        let with_n: Vec<(PlaceHandle, i128)> = query
            .places
            .iter()
            .zip(&query.n)
            .map(|(&p, &v)| (p, v))
            .collect();
        let with_n_minus_c: Vec<(PlaceHandle, i128)> = query
            .places
            .iter()
            .zip(query.n.iter().zip(&query.c))
            .map(|(&p, (&nv, &cv))| (p, nv - cv))
            .collect();
        Ok(self.rr_dim(&with_n)? == self.rr_dim(&with_n_minus_c)?)
    }

    /// c-gap test by the floor criterion: for every t in 0..m, either the
    /// restricted degree is negative or no selected floor moves when c is
    /// subtracted. Agrees with [`Self::is_c_gap_by_def`] on every valid input.
    pub fn is_c_gap_criterion(&self, query: &CGapQuery) -> Result<bool, Error> {
        self.check_places(&query.places)?;
        if query.n.len() != query.places.len() || query.c.len() != query.places.len() {
            return Err(Error::LengthMismatch {
                expected: query.places.len(),
                got: query.n.len().min(query.c.len()),
            });
        }
        let sel = self.selected_per_class(&query.places);
        Ok(self.c_gap_criterion_raw(&query.places, &sel, &query.n, &query.c))
    }

    /// Criterion body without validation, for tight enumeration loops.
    fn c_gap_criterion_raw(
        &self,
        places: &[PlaceHandle],
        sel: &[u64],
        n: &[i128],
        c: &[i128],
    ) -> bool {
        let m = self.m;
        for t in 0..m {
            let total = self.restricted_total(places, n, sel, t);
            if total < 0 {
                continue;
            }
            for ((p, &ni), &ci) in places.iter().zip(n).zip(c) {
                let shift = mul(t, self.classes[p.class].lambda);
                if floor_div(add(ni, shift), m) != floor_div(add(ni - ci, shift), m) {
                    return false;
                }
            }
        }
        true
    }

    /// Pure-gap test: a 1-gap, i.e. c = (1, ..., 1).
    pub fn is_pure_gap(&self, places: &[PlaceHandle], n: &[i128]) -> Result<bool, Error> {
        let query = CGapQuery::new(self, places.to_vec(), n.to_vec(), vec![1; places.len()])?;
        self.is_c_gap_criterion(&query)
    }

    /// Weierstrass semigroup membership: (n_1, ..., n_s) is realized as an
    /// exact pole divisor iff removing any place with n_j >= 1 drops the
    /// dimension. The zero tuple is always a member (constants).
    pub fn is_semigroup_member(&self, places: &[PlaceHandle], n: &[i128]) -> Result<bool, Error> {
        if n.len() != places.len() {
            return Err(Error::LengthMismatch {
                expected: places.len(),
                got: n.len(),
            });
        }
        for &v in n {
            if v < 0 {
                return Err(Error::Negative {
                    what: "n",
                    value: v,
                });
            }
        }
        let coeffs: Vec<(PlaceHandle, i128)> =
            places.iter().zip(n).map(|(&p, &v)| (p, v)).collect();
        let full = self.rr_dim(&coeffs)?;
        for j in 0..coeffs.len() {
            if coeffs[j].1 == 0 {
                continue;
            }
            let mut reduced = coeffs.clone();
            reduced[j].1 -= 1;
            if self.rr_dim(&reduced)? == full {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All gaps at one totally ramified place, scanned over [1, 2g-1].
    /// The Weierstrass gap theorem pins the count to exactly g.
    pub fn gaps_at_place(&self, place: PlaceHandle) -> Result<Vec<i128>, Error> {
        self.check_places(&[place])?;
        let g = self.genus()?;
        let mut gaps = Vec::new();
        let mut prev = self.rr_dim(&[(place, 0)])?;
        let mut n = 1i128;
        while n < 2 * g {
            let cur = self.rr_dim(&[(place, n)])?;
            if cur == prev {
                gaps.push(n);
            }
            prev = cur;
            n += 1;
        }
        Ok(gaps)
    }

    /// The default enumeration box [1, 2g-1] per coordinate: every coordinate
    /// of a pure gap is a one-point gap, hence at most 2g-1.
    pub fn default_pure_gap_box(&self, s: usize) -> Result<Vec<i128>, Error> {
        let g = self.genus()?;
        Ok(vec![2 * g - 1; s])
    }

    /// All pure gaps with 1 <= n_i <= box_upper[i], as a deterministic set.
    pub fn enumerate_pure_gaps(
        &self,
        places: &[PlaceHandle],
        box_upper: &[i128],
    ) -> Result<BTreeSet<Vec<i128>>, Error> {
        self.check_places(places)?;
        if places.is_empty() {
            return Err(Error::BadParameter("need at least one place".into()));
        }
        if box_upper.len() != places.len() {
            return Err(Error::LengthMismatch {
                expected: places.len(),
                got: box_upper.len(),
            });
        }
        let mut out = BTreeSet::new();
        if box_upper.iter().any(|&b| b < 1) {
            return Ok(out);
        }
        let sel = self.selected_per_class(places);
        let ones = vec![1i128; places.len()];
        let mut n: Vec<i128> = vec![1; places.len()];
        loop {
            if self.c_gap_criterion_raw(places, &sel, &n, &ones) {
                out.insert(n.clone());
            }
            // odometer step
            let mut i = places.len();
            loop {
                if i == 0 {
                    return Ok(out);
                }
                i -= 1;
                if n[i] < box_upper[i] {
                    n[i] += 1;
                    break;
                }
                n[i] = 1;
            }
        }
    }
}

fn is_prime(p: i128) -> bool {
    crate::arith::prime_power(p) == Some((p, 1))
}
