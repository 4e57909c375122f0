//! Dominant integral weights of sl(r+1) in partition normal form, level
//! truncation, duality, the level-dependent lattice rotation, the Casimir
//! scalar, and bundle specifications.
//!
//! A weight is stored as a partition with exactly `r+1` parts whose last
//! part is zero; the fundamental-weight coordinates are the consecutive
//! differences. This normal form makes duality and the rotation action
//! one-liners and gives a canonical hash/eq key for memoization.

use crate::{rat_int, Error, Rat, Result};
use serde::de::{SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

/// Dominant integral weight of sl(r+1) in partition normal form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    parts: Vec<u32>,
}

impl Weight {
    /// Build a weight from partition parts. The parts must be non-increasing;
    /// they are normalized by subtracting the last part (adding a multiple of
    /// the all-ones vector does not change the sl(r+1) weight). The slice
    /// length fixes the rank: `parts.len() == r + 1`, `r >= 1`.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.len() < 2 {
            return Err(Error::InvalidWeight(format!(
                "need at least 2 partition parts (rank >= 1), got {}",
                parts.len()
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidWeight(format!(
                "parts must be non-increasing: {parts:?}"
            )));
        }
        let last = *parts.last().unwrap();
        let parts = if last == 0 {
            parts
        } else {
            parts.iter().map(|&p| p - last).collect()
        };
        Ok(Weight { parts })
    }

    /// The zero weight of sl(r+1).
    pub fn zero(r: u32) -> Self {
        Weight {
            parts: vec![0; r as usize + 1],
        }
    }

    /// Fundamental weight `omega_i`, `1 <= i <= r`.
    pub fn omega(r: u32, i: u32) -> Result<Self> {
        if i == 0 || i > r {
            return Err(Error::InvalidWeight(format!(
                "omega_{i} is out of range for sl({})",
                r + 1
            )));
        }
        let mut parts = vec![0u32; r as usize + 1];
        for p in parts.iter_mut().take(i as usize) {
            *p = 1;
        }
        Ok(Weight { parts })
    }

    /// Weight from fundamental-weight coordinates `(c_1, ..., c_r)`:
    /// `parts_i = c_i + c_{i+1} + ... + c_r`.
    pub fn from_fund_coords(coords: &[u32]) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidWeight(
                "need at least one fundamental coordinate".into(),
            ));
        }
        let r = coords.len();
        let mut parts = vec![0u32; r + 1];
        let mut acc = 0u32;
        for i in (0..r).rev() {
            acc = acc
                .checked_add(coords[i])
                .ok_or_else(|| Error::Overflow("fundamental coordinates".into()))?;
            parts[i] = acc;
        }
        Ok(Weight { parts })
    }

    /// Fundamental-weight coordinates `(c_1, ..., c_r)`, the consecutive
    /// differences of the partition parts.
    pub fn fund_coords(&self) -> Vec<u32> {
        self.parts.windows(2).map(|w| w[0] - w[1]).collect()
    }

    pub fn r(&self) -> u32 {
        self.parts.len() as u32 - 1
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of boxes `|lambda|`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Widest part; a weight fits level `l` iff `first_part() <= l`.
    pub fn first_part(&self) -> u32 {
        self.parts[0]
    }

    pub fn is_zero(&self) -> bool {
        self.parts[0] == 0
    }

    /// Dual (highest weight of the dual representation):
    /// `parts'_i = parts_1 - parts_{r+2-i}`. Involutive.
    pub fn dual(&self) -> Weight {
        let k = self.parts.len();
        let top = self.parts[0];
        let parts = (0..k).map(|i| top - self.parts[k - 1 - i]).collect();
        Weight { parts }
    }

    /// Scale every part by `m`.
    pub fn scale(&self, m: u32) -> Weight {
        let parts = self
            .parts
            .iter()
            .map(|&p| p.checked_mul(m).expect("weight scaling overflowed u32"))
            .collect();
        Weight { parts }
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.parts.len()))?;
        for p in &self.parts {
            seq.serialize_element(p)?;
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = Weight;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of r+1 non-increasing partition parts")
            }
            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<Weight, A::Error> {
                let mut parts = Vec::new();
                while let Some(p) = seq.next_element::<u32>()? {
                    parts.push(p);
                }
                Weight::new(parts).map_err(serde::de::Error::custom)
            }
        }
        deserializer.deserialize_seq(V)
    }
}

/// A weight together with a level bound (an integrable level-`l` weight).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LevelWeight {
    pub weight: Weight,
    pub level: u32,
}

impl LevelWeight {
    pub fn new(weight: Weight, level: u32) -> Result<Self> {
        if weight.first_part() > level {
            return Err(Error::LevelMismatch(format!(
                "weight {weight} exceeds level {level}"
            )));
        }
        Ok(LevelWeight { weight, level })
    }

    /// The lattice rotation `sigma_j` at this level: `sigma_1` prepends the
    /// level to the first `r` parts and renormalizes; `sigma_j` is `sigma_1`
    /// iterated. On fundamental coordinates it sends `omega_i` to
    /// `omega_{i+j mod r+1}` (indices mod `r+1`, with `omega_0 = 0`), so
    /// iterating `r+1` times is the identity.
    pub fn pluss(&self, j: u32) -> LevelWeight {
        let r = self.weight.r() as usize;
        let reps = (j as usize) % (r + 1);
        let mut parts = self.weight.parts.clone();
        for _ in 0..reps {
            let mut next = Vec::with_capacity(r + 1);
            next.push(self.level);
            next.extend_from_slice(&parts[..r]);
            let last = next[r];
            for p in next.iter_mut() {
                *p -= last;
            }
            parts = next;
        }
        LevelWeight {
            weight: Weight { parts },
            level: self.level,
        }
    }
}

/// Casimir scalar of a weight of sl(r+1):
/// `sum_i parts_i (parts_i + r + 2 - 2i) - |lambda|^2 / (r+1)`,
/// with `i` running 1-based over the `r+1` parts. Rational, non-negative,
/// and invariant under duality.
pub fn casimir(w: &Weight) -> Rat {
    let r = w.r() as i64;
    let mut sum = 0i64;
    for (idx, &p) in w.parts().iter().enumerate() {
        let p = p as i64;
        sum += p * (p + r - 2 * idx as i64);
    }
    let size = w.size() as i64;
    rat_int(sum) - rat_int(size * size) / rat_int(r + 1)
}

/// All level-`l` weights of sl(r+1) (partitions inside the `r x l` box),
/// in graded lexicographic order (by size, then lex on parts). The count is
/// `binomial(l + r, r)`.
pub fn enumerate_level_weights(r: u32, level: u32) -> Vec<LevelWeight> {
    let mut parts = vec![0u32; r as usize + 1];
    let mut out = Vec::new();
    fn rec(parts: &mut Vec<u32>, idx: usize, max: u32, r: usize, out: &mut Vec<Weight>) {
        if idx == r {
            out.push(Weight {
                parts: parts.clone(),
            });
            return;
        }
        for v in 0..=max {
            parts[idx] = v;
            rec(parts, idx + 1, v, r, out);
        }
        parts[idx] = 0;
    }
    let mut ws = Vec::new();
    rec(&mut parts, 0, level, r as usize, &mut ws);
    ws.sort_by(|a, b| (a.size(), &a.parts).cmp(&(b.size(), &b.parts)));
    out.extend(
        ws.into_iter()
            .map(|weight| LevelWeight { weight, level }),
    );
    out
}

/// Specification of a conformal-blocks bundle: algebra sl(r+1), level,
/// genus, and the marked-point weights (all at the given level).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BundleSpec {
    pub r: u32,
    pub level: u32,
    pub genus: u32,
    pub weights: Vec<Weight>,
}

#[derive(Serialize, Deserialize)]
struct SpecWire {
    r: u32,
    level: u32,
    genus: u32,
    n: usize,
    weights: Vec<Weight>,
}

impl BundleSpec {
    pub fn new(r: u32, level: u32, genus: u32, weights: Vec<Weight>) -> Result<Self> {
        if r == 0 {
            return Err(Error::InvalidSpec("rank r must be at least 1".into()));
        }
        for w in &weights {
            if w.r() != r {
                return Err(Error::InvalidSpec(format!(
                    "weight {w} has rank {} but spec has r = {r}",
                    w.r()
                )));
            }
            if w.first_part() > level {
                return Err(Error::LevelMismatch(format!(
                    "weight {w} exceeds level {level}"
                )));
            }
        }
        Ok(BundleSpec {
            r,
            level,
            genus,
            weights,
        })
    }

    pub fn n(&self) -> usize {
        self.weights.len()
    }

    /// The m-th scaled bundle: weights and level both multiplied by `m`.
    pub fn scale(&self, m: u32) -> BundleSpec {
        BundleSpec {
            r: self.r,
            level: self.level.checked_mul(m).expect("level scaling overflowed"),
            genus: self.genus,
            weights: self.weights.iter().map(|w| w.scale(m)).collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&SpecWire {
            r: self.r,
            level: self.level,
            genus: self.genus,
            n: self.n(),
            weights: self.weights.clone(),
        })
        .expect("spec serialization cannot fail")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let wire: SpecWire = serde_json::from_str(s)?;
        if wire.n != wire.weights.len() {
            return Err(Error::InvalidSpec(format!(
                "n = {} but {} weights given",
                wire.n,
                wire.weights.len()
            )));
        }
        BundleSpec::new(wire.r, wire.level, wire.genus, wire.weights)
    }
}
