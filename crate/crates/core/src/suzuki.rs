//! Two-point gap machinery for the Suzuki curve y^q - y = x^{q0}(x^q - x),
//! q0 = 2^h, q = 2q0^2.
//!
//! This is deliberately independent of the Kummer engine: the one-point gap
//! set at a rational place is the complement of the numerical semigroup
//! generated by (q, q+q0, q+2q0, q+2q0+1), and the two-point pure gaps are
//! characterized through the pairing
//!
//! ```text
//! beta(n) = 2g - 1 + q - (q-1) j(n) - n
//! ```
//!
//! where j(n) comes from writing a gap as
//! n = r (q+2q0+1) + m q0 + s with 0 <= s <= q0 - 1:
//! j = s + q0 when s <= floor((m-1)/2) + 1 and j = s otherwise
//! (the floor is toward -inf, so the m = 0 threshold is 0). A pair of gaps
//! is a pure gap exactly when n2 < beta(n1) and n1 < beta(n2).

use crate::arith::floor_div;
use crate::Error;
use serde::Serialize;

/// Gap data for one Suzuki curve: parameters, semigroup generators, and the
/// full (genus-sized) gap set.
#[derive(Clone, Debug, Serialize)]
pub struct SuzukiProfile {
    pub q0: i128,
    pub q: i128,
    pub genus: i128,
    pub generators: [i128; 4],
    pub gaps: Vec<i128>,
}

/// A gap written against the semigroup's largest generator:
/// n = r (q+2q0+1) + m q0 + s, with the derived branch value j.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SuzukiDecomposition {
    pub n: i128,
    pub r: i128,
    pub m: i128,
    pub s: i128,
    pub j: i128,
}

impl SuzukiProfile {
    /// Builds the profile for q0 = 2^h >= 2: sieves semigroup membership up
    /// to 2g and collects the gaps in [1, 2g-1].
    pub fn new(q0: i128) -> Result<Self, Error> {
        if q0 < 2 || q0.count_ones() != 1 {
            return Err(Error::BadParameter(format!(
                "q0 = {q0} must be a power of two, at least 2"
            )));
        }
        let q = 2 * q0 * q0;
        let genus = q0 * (q - 1);
        let generators = [q, q + q0, q + 2 * q0, q + 2 * q0 + 1];
        let limit = (2 * genus) as usize;
        let mut member = vec![false; limit + 1];
        member[0] = true;
        for v in 1..=limit {
            member[v] = generators
                .iter()
                .any(|&g| v as i128 >= g && member[v - g as usize]);
        }
        let gaps: Vec<i128> = (1..2 * genus).filter(|&v| !member[v as usize]).collect();
        Ok(SuzukiProfile {
            q0,
            q,
            genus,
            generators,
            gaps,
        })
    }

    pub fn is_gap(&self, n: i128) -> bool {
        self.gaps.binary_search(&n).is_ok()
    }

    /// Decomposes a gap as n = r (q+2q0+1) + m q0 + s and derives j.
    /// Rejects non-gaps: the decomposition is only meaningful on the gap set.
    pub fn decompose(&self, n: i128) -> Result<SuzukiDecomposition, Error> {
        if !self.is_gap(n) {
            return Err(Error::NotAGap { n });
        }
        let big = self.q + 2 * self.q0 + 1;
        let r = floor_div(n, big);
        let rem = n - r * big;
        let m = floor_div(rem, self.q0);
        let s = rem - m * self.q0;
        // floor toward -inf makes the threshold 0 when m = 0
        let j = if s <= floor_div(m - 1, 2) + 1 {
            s + self.q0
        } else {
            s
        };
        Ok(SuzukiDecomposition { n, r, m, s, j })
    }

    /// The pairing beta(n) = 2g - 1 + q - (q-1) j - n. Maps the gap set onto
    /// itself bijectively.
    pub fn beta(&self, n: i128) -> Result<i128, Error> {
        let d = self.decompose(n)?;
        Ok(2 * self.genus - 1 + self.q - (self.q - 1) * d.j - n)
    }

    /// True when beta composed with itself is the identity on the gap set.
    pub fn beta_is_involution(&self) -> bool {
        self.gaps
            .iter()
            .all(|&n| self.beta(self.beta(n).unwrap()).ok() == Some(n))
    }

    /// All two-point pure gaps: pairs of gaps with n2 < beta(n1) and
    /// n1 < beta(n2). Lexicographically sorted; symmetric under swap.
    pub fn pure_gaps(&self) -> Vec<(i128, i128)> {
        let betas: Vec<i128> = self
            .gaps
            .iter()
            .map(|&n| self.beta(n).expect("gap set is closed under beta"))
            .collect();
        let mut out = Vec::new();
        for (i, &n1) in self.gaps.iter().enumerate() {
            for (k, &n2) in self.gaps.iter().enumerate() {
                if n2 < betas[i] && n1 < betas[k] {
                    out.push((n1, n2));
                }
            }
        }
        out
    }

    /// The closed-form pure-gap pair realizing the maximal coordinate sum:
    /// (eps (q+2q0+1) + 1, 2g - q - 1 - eps (q+2q0+1)), eps in [0, 2q0-3].
    pub fn max_sum_pair(&self, eps: i128) -> Result<(i128, i128), Error> {
        let hi = 2 * self.q0 - 3;
        if eps < 0 || eps > hi {
            return Err(Error::ParamOutOfRange {
                what: "eps",
                value: eps,
                lo: 0,
                hi,
            });
        }
        let big = self.q + 2 * self.q0 + 1;
        Ok((eps * big + 1, 2 * self.genus - self.q - 1 - eps * big))
    }

    /// Exhaustive maximum of n1 + n2 over the pure gaps (expected: 2g - q).
    pub fn max_pure_gap_sum(&self) -> i128 {
        self.pure_gaps()
            .iter()
            .map(|&(a, b)| a + b)
            .max()
            .expect("pure gap set is never empty for q0 >= 2")
    }

    /// The pure gaps whose coordinate sum is exactly 2g - q, sorted
    /// lexicographically. Expected to equal the [`Self::max_sum_pair`]
    /// family closed under swap.
    pub fn classify_max_sum(&self) -> Vec<(i128, i128)> {
        let target = 2 * self.genus - self.q;
        self.pure_gaps()
            .into_iter()
            .filter(|&(a, b)| a + b == target)
            .collect()
    }
}
