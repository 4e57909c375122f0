//! Fusion coefficients for sl(r+1) at a level, via Littlewood-Richardson
//! combinatorics and affine Weyl straightening, plus the small quantum
//! cohomology product of Grassmannians that the three-point numbers embed
//! into.
//!
//! Two reductions of an overflowing partition appear here and they are not
//! the same map:
//!
//! * `free_straighten` reduces every beta-coordinate mod `N = r+1+level`
//!   independently. This is rim-hook reduction in `QH*(Gr(r+1, N))`: the
//!   total number of hooks removed is the power of `q` and the sign per
//!   hook is `(-1)^{(r+1) - height}`. Used by [`quantum_product`].
//! * `su_straighten` reduces by the affine Weyl group of sl(r+1), whose
//!   translation lattice is the *zero-sum* sublattice. After reducing the
//!   residues one must rotate the `T mod (r+1)` smallest residues back to
//!   the top (adding `N` to each), which costs an extra block-rotation
//!   sign. This is the reduction that lands on an integrable weight and it
//!   is what fusion rows use. Collapsing the two maps silently produces
//!   answers that are only correct for sl(2), which is why both are spelled
//!   out and cross-checked against an independent closed form below.

use crate::weights::{enumerate_level_weights, LevelWeight, Weight};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::{BufRead, Write as IoWrite};
use std::path::Path;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::{Arc, RwLock};

/// Littlewood-Richardson coefficient `c_{lambda,mu}^{rho}`: the number of
/// semistandard tableaux of shape `mu` whose reverse reading word is
/// `lambda`-dominant with content `rho - lambda`. Zero when the sizes do
/// not add up or `lambda` is not contained in `rho`.
pub fn lr_coefficient(lambda: &[u32], mu: &[u32], rho: &[u32]) -> u128 {
    let lam_size: u64 = lambda.iter().map(|&p| p as u64).sum();
    let mu_size: u64 = mu.iter().map(|&p| p as u64).sum();
    let rho_size: u64 = rho.iter().map(|&p| p as u64).sum();
    if lam_size + mu_size != rho_size {
        return 0;
    }
    let rho = trim(rho);
    let k = rho.len();
    let mut lam = trim(lambda);
    if lam.len() > k {
        return 0;
    }
    lam.resize(k, 0);
    if lam.iter().zip(&rho).any(|(&l, &r)| l > r) {
        return 0;
    }
    let caps: Vec<u32> = rho.iter().zip(&lam).map(|(&r, &l)| r - l).collect();
    let shape = trim(mu);
    if shape.is_empty() {
        return 1; // rho == lambda at this point
    }
    let mut count: u128 = 0;
    enumerate_dominant_tableaux(&lam, &shape, k, Some(&caps), &mut |_| {
        count = count.checked_add(1).expect("LR coefficient overflowed u128");
    });
    count
}

fn trim(p: &[u32]) -> Vec<u32> {
    let mut v = p.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// Depth-first enumeration of `lambda`-dominant semistandard tableaux of
/// the given shape with entries in `1..=k`. The visitor receives
/// `nu = lambda + content`, a partition with `k` parts. With `caps` set,
/// letter `v` is placed at most `caps[v-1]` times (targeted single
/// coefficient mode).
fn enumerate_dominant_tableaux<F: FnMut(&[u32])>(
    lambda: &[u32],
    shape: &[u32],
    k: usize,
    caps: Option<&[u32]>,
    visit: &mut F,
) {
    debug_assert!(lambda.len() == k);
    debug_assert!(!shape.is_empty() && *shape.last().unwrap() > 0);
    if shape.len() > k {
        return; // columns would need more than k distinct letters
    }
    let rows = shape.len();
    let mut grid: Vec<Vec<u16>> = shape.iter().map(|&w| vec![0u16; w as usize]).collect();
    let mut counts = vec![0u32; k + 1];
    let mut nu = vec![0u32; k];

    struct St<'a> {
        lambda: &'a [u32],
        shape: &'a [u32],
        k: usize,
        caps: Option<&'a [u32]>,
        grid: &'a mut Vec<Vec<u16>>,
        counts: &'a mut Vec<u32>,
        nu: &'a mut Vec<u32>,
        rows: usize,
    }

    fn rec<F: FnMut(&[u32])>(st: &mut St, row: usize, col: usize, visit: &mut F) {
        // upper bound: weak increase along the row (cell to the right was
        // placed earlier in reverse reading order)
        let hi = if (col as u32) + 1 < st.shape[row] {
            st.grid[row][col + 1]
        } else {
            st.k as u16
        };
        // lower bound: strict increase down the column
        let lo = if row > 0 { st.grid[row - 1][col] + 1 } else { 1 };
        for v in lo..=hi {
            let vu = v as usize;
            if v >= 2 {
                // dominance after placing one more v:
                // lambda_v + cnt_v + 1 <= lambda_{v-1} + cnt_{v-1}
                if st.lambda[vu - 1] + st.counts[vu] + 1
                    > st.lambda[vu - 2] + st.counts[vu - 1]
                {
                    continue;
                }
            }
            if let Some(caps) = st.caps {
                if st.counts[vu] >= caps[vu - 1] {
                    continue;
                }
            }
            st.grid[row][col] = v;
            st.counts[vu] += 1;
            if col > 0 {
                rec(st, row, col - 1, visit);
            } else if row + 1 < st.rows {
                let next_col = st.shape[row + 1] as usize - 1;
                rec(st, row + 1, next_col, visit);
            } else {
                for i in 0..st.k {
                    st.nu[i] = st.lambda[i] + st.counts[i + 1];
                }
                visit(st.nu);
            }
            st.counts[vu] -= 1;
        }
    }

    let mut st = St {
        lambda,
        shape,
        k,
        caps,
        grid: &mut grid,
        counts: &mut counts,
        nu: &mut nu,
        rows,
    };
    let start_col = shape[0] as usize - 1;
    rec(&mut st, 0, start_col, visit);
}

/// Shared beta-number bookkeeping for both straightenings. Returns the
/// residues sorted descending, the total shift `T`, and the sorting
/// permutation sign; `None` on a residue collision (the term dies on an
/// affine wall).
fn beta_residues(nu: &[u32], n_mod: u32) -> Option<(Vec<u32>, u32, i32)> {
    let k = nu.len();
    let mut res: Vec<u32> = Vec::with_capacity(k);
    let mut total_shift = 0u32;
    for (i, &p) in nu.iter().enumerate() {
        let beta = p + (k - 1 - i) as u32;
        res.push(beta % n_mod);
        total_shift += beta / n_mod;
    }
    let mut inversions = 0u32;
    for i in 0..k {
        for j in i + 1..k {
            if res[i] == res[j] {
                return None;
            }
            if res[i] < res[j] {
                inversions += 1;
            }
        }
    }
    res.sort_unstable_by(|a, b| b.cmp(a));
    let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
    Some((res, total_shift, sign))
}

/// Rim-hook reduction in `QH*(Gr(k, n_mod))`: box partition, q-degree, sign.
fn free_straighten(nu: &[u32], n_mod: u32) -> Option<(Vec<u32>, u32, i32)> {
    let k = nu.len();
    let (res, d, mut sign) = beta_residues(nu, n_mod)?;
    if (k - 1) as u32 * d % 2 == 1 {
        sign = -sign;
    }
    let nu0: Vec<u32> = (0..k).map(|i| res[i] - (k - 1 - i) as u32).collect();
    Some((nu0, d, sign))
}

/// Affine Weyl reduction for sl(k) fusion: integrable weight and sign.
/// The zero-sum translation constraint is restored by rotating the
/// `T mod k` smallest residues to the top (each gains `n_mod`), which
/// multiplies the sign by the block-rotation parity `(-1)^{j(k-j)}`.
fn su_straighten(nu: &[u32], n_mod: u32) -> Option<(Weight, i32)> {
    let k = nu.len();
    let (res, total_shift, mut sign) = beta_residues(nu, n_mod)?;
    let j = (total_shift as usize) % k;
    if (j * (k - j)) % 2 == 1 {
        sign = -sign;
    }
    let mut beta = Vec::with_capacity(k);
    beta.extend(res[k - j..].iter().map(|&x| x + n_mod));
    beta.extend_from_slice(&res[..k - j]);
    let parts: Vec<u32> = (0..k).map(|i| beta[i] - (k - 1 - i) as u32).collect();
    let w = Weight::new(parts).expect("straightened parts are a partition");
    Some((w, sign))
}

/// A product in the small quantum cohomology of `Gr(r+1, r+1+l)`:
/// `terms[(nu, d)]` is the coefficient of `q^d sigma_nu` (partitions
/// trimmed of trailing zeros). Every coefficient satisfies
/// `|lambda| + |mu| = |nu| + d (r+1+l)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuantumProduct {
    pub r: u32,
    pub level: u32,
    pub terms: BTreeMap<(Vec<u32>, u32), u128>,
}

impl fmt::Display for QuantumProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for ((nu, d), c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if *c != 1 {
                write!(f, "{c}*")?;
            }
            match d {
                0 => {}
                1 => write!(f, "q*")?,
                _ => write!(f, "q^{d}*")?,
            }
            let body: Vec<String> = nu.iter().map(|p| p.to_string()).collect();
            write!(f, "s[{}]", body.join(","))?;
        }
        Ok(())
    }
}

/// Quantum product `sigma_lambda * sigma_mu` in `QH*(Gr(r+1, r+1+level))`.
/// Inputs must be partitions inside the `(r+1) x level` box.
pub fn quantum_product(lambda: &[u32], mu: &[u32], r: u32, level: u32) -> Result<QuantumProduct> {
    let k = (r + 1) as usize;
    for (name, p) in [("lambda", lambda), ("mu", mu)] {
        if p.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidWeight(format!(
                "{name} = {p:?} is not a partition"
            )));
        }
        let t = trim(p);
        if t.len() > k || t.first().copied().unwrap_or(0) > level {
            return Err(Error::InvalidWeight(format!(
                "{name} = {p:?} does not fit the {k} x {level} box"
            )));
        }
    }
    let n_mod = r + 1 + level;
    let (big, small) = if lambda.iter().map(|&p| p as u64).sum::<u64>()
        >= mu.iter().map(|&p| p as u64).sum::<u64>()
    {
        (lambda, mu)
    } else {
        (mu, lambda)
    };
    let mut lam = trim(big);
    lam.resize(k, 0);
    let shape = trim(small);

    let mut acc: HashMap<(Vec<u32>, u32), i128> = HashMap::new();
    let mut bump = |key: (Vec<u32>, u32), sign: i32| {
        let e = acc.entry(key).or_insert(0);
        *e = e
            .checked_add(sign as i128)
            .expect("quantum product coefficient overflowed");
    };
    if shape.is_empty() {
        bump((trim(&lam), 0), 1);
    } else {
        enumerate_dominant_tableaux(&lam, &shape, k, None, &mut |nu| {
            if let Some((nu0, d, sign)) = free_straighten(nu, n_mod) {
                bump((trim(&nu0), d), sign);
            }
        });
    }

    let mut terms = BTreeMap::new();
    for ((nu, d), c) in acc {
        if c == 0 {
            continue;
        }
        if c < 0 {
            return Err(Error::Normalization(format!(
                "negative quantum coefficient {c} at q^{d} sigma_{nu:?}"
            )));
        }
        terms.insert((nu, d), c as u128);
    }
    Ok(QuantumProduct { r, level, terms })
}

/// Closed form for sl(2) three-point fusion numbers:
/// `N(a,b,c)` at the given level is 1 exactly when `a+b+c` is even, the
/// triangle inequalities hold, and `a+b+c <= 2*level`; otherwise 0.
pub fn fuse3_sl2_oracle(a: u32, b: u32, c: u32, level: u32) -> u128 {
    let s = a + b + c;
    if !s.is_multiple_of(2) || a.abs_diff(b) > c || c > a + b || s > 2 * level {
        0
    } else {
        1
    }
}

type RowMap = HashMap<Weight, u128>;
type RowKey = (u32, Weight, Weight);
type TripleKey = (u32, [Weight; 3]);

#[derive(Serialize, Deserialize)]
struct TripleRecord {
    r: u32,
    l: u32,
    a: Weight,
    b: Weight,
    c: Weight,
    #[serde(rename = "N")]
    n: String,
}

/// Fusion engine: computes structure-constant rows of the level-truncated
/// ring and memoizes them in-process; individual three-point numbers are
/// additionally backed by a persistent JSON-lines cache that admits
/// concurrent readers with serialized insertion.
pub struct FusionEngine {
    rows: RwLock<HashMap<RowKey, Arc<RowMap>>>,
    triples: RwLock<HashMap<TripleKey, u128>>,
    dirty: AtomicBool,
}

impl Default for FusionEngine {
    fn default() -> Self {
        Self::new()
    }
}

impl FusionEngine {
    pub fn new() -> Self {
        FusionEngine {
            rows: RwLock::new(HashMap::new()),
            triples: RwLock::new(HashMap::new()),
            dirty: AtomicBool::new(false),
        }
    }

    /// Structure-constant row: the map `w -> coefficient of V_w` in the
    /// fusion product `V_a x V_b` at the given level. Symmetric in `a, b`;
    /// memoized on the sorted pair.
    pub fn row(&self, level: u32, a: &Weight, b: &Weight) -> Arc<RowMap> {
        debug_assert_eq!(a.r(), b.r());
        debug_assert!(a.first_part() <= level && b.first_part() <= level);
        let key: RowKey = if a <= b {
            (level, a.clone(), b.clone())
        } else {
            (level, b.clone(), a.clone())
        };
        if let Some(hit) = self.rows.read().unwrap().get(&key) {
            return Arc::clone(hit);
        }
        let computed = Arc::new(fusion_row(level, a, b));
        let mut rows = self.rows.write().unwrap();
        Arc::clone(rows.entry(key).or_insert(computed))
    }

    /// Three-point fusion number `N(a, b, c)` for level weights with a
    /// common level, fully symmetric and duality-invariant.
    pub fn fuse3(&self, a: &LevelWeight, b: &LevelWeight, c: &LevelWeight) -> Result<u128> {
        if a.level != b.level || b.level != c.level {
            return Err(Error::LevelMismatch(format!(
                "levels {} / {} / {} differ",
                a.level, b.level, c.level
            )));
        }
        if a.weight.r() != b.weight.r() || b.weight.r() != c.weight.r() {
            return Err(Error::InvalidWeight(
                "three-point weights have different ranks".into(),
            ));
        }
        Ok(self.fuse3_weights(a.level, &a.weight, &b.weight, &c.weight))
    }

    /// Same as [`fuse3`](Self::fuse3) on bare weights. The triple is looked
    /// up in (and inserted into) the persistent cache layer.
    pub fn fuse3_weights(&self, level: u32, a: &Weight, b: &Weight, c: &Weight) -> u128 {
        let k = (a.r() + 1) as u64;
        let total = a.size() + b.size() + c.size();
        if !total.is_multiple_of(k) {
            return 0;
        }
        let mut ws = [a.clone(), b.clone(), c.clone()];
        ws.sort();
        let key: TripleKey = (level, ws);
        if let Some(&hit) = self.triples.read().unwrap().get(&key) {
            return hit;
        }
        let s = (total / k) as i64 - level as i64;
        let value = if s < 0 {
            // classical coinvariants: c_{a,b}^{kappa} with
            // kappa_i = M - c_{r+2-i}, M = total / (r+1)
            let m = total / k;
            let r1 = a.parts().len();
            let mut kappa = Vec::with_capacity(r1);
            let mut ok = true;
            for i in 0..r1 {
                let cc = c.parts()[r1 - 1 - i] as u64;
                if m < cc {
                    ok = false;
                    break;
                }
                kappa.push((m - cc) as u32);
            }
            if ok {
                lr_coefficient(a.parts(), b.parts(), &kappa)
            } else {
                0
            }
        } else {
            self.row(level, a, b)
                .get(&c.dual())
                .copied()
                .unwrap_or(0)
        };
        self.triples.write().unwrap().insert(key, value);
        self.dirty.store(true, Ordering::Relaxed);
        value
    }

    pub fn is_dirty(&self) -> bool {
        self.dirty.load(Ordering::Relaxed)
    }

    pub fn cached_triples(&self) -> usize {
        self.triples.read().unwrap().len()
    }

    /// Load a JSON-lines cache file. Duplicate records are tolerated when
    /// they agree; a conflicting duplicate is an error. Returns the number
    /// of records read.
    pub fn load_cache(&self, path: &Path) -> Result<usize> {
        let file = std::fs::File::open(path)?;
        let reader = std::io::BufReader::new(file);
        let mut count = 0usize;
        let mut triples = self.triples.write().unwrap();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            if line.trim().is_empty() {
                continue;
            }
            let rec: TripleRecord = serde_json::from_str(&line).map_err(|e| {
                Error::Cache(format!("line {}: {e}", lineno + 1))
            })?;
            for w in [&rec.a, &rec.b, &rec.c] {
                if w.r() != rec.r {
                    return Err(Error::Cache(format!(
                        "line {}: weight {w} does not match r = {}",
                        lineno + 1,
                        rec.r
                    )));
                }
                if w.first_part() > rec.l {
                    return Err(Error::Cache(format!(
                        "line {}: weight {w} exceeds level {}",
                        lineno + 1,
                        rec.l
                    )));
                }
            }
            let value: u128 = rec.n.parse().map_err(|e| {
                Error::Cache(format!("line {}: bad N {:?}: {e}", lineno + 1, rec.n))
            })?;
            let mut ws = [rec.a, rec.b, rec.c];
            ws.sort();
            let key: TripleKey = (rec.l, ws);
            if let Some(&old) = triples.get(&key) {
                if old != value {
                    return Err(Error::Cache(format!(
                        "line {}: conflicting values {old} and {value} for one triple",
                        lineno + 1
                    )));
                }
            }
            triples.insert(key, value);
            count += 1;
        }
        Ok(count)
    }

    /// Write the triple cache as sorted JSON lines, atomically (temp file
    /// in the same directory, then rename). Returns the records written.
    pub fn save_cache(&self, path: &Path) -> Result<usize> {
        let snapshot: Vec<(TripleKey, u128)> = {
            let triples = self.triples.read().unwrap();
            let mut v: Vec<_> = triples.iter().map(|(k, &n)| (k.clone(), n)).collect();
            v.sort();
            v
        };
        let tmp = path.with_extension("tmp");
        {
            let mut out = std::io::BufWriter::new(std::fs::File::create(&tmp)?);
            for ((level, ws), n) in &snapshot {
                let rec = TripleRecord {
                    r: ws[0].r(),
                    l: *level,
                    a: ws[0].clone(),
                    b: ws[1].clone(),
                    c: ws[2].clone(),
                    n: n.to_string(),
                };
                serde_json::to_writer(&mut out, &rec)?;
                out.write_all(b"\n")?;
            }
            out.flush()?;
        }
        std::fs::rename(&tmp, path)?;
        self.dirty.store(false, Ordering::Relaxed);
        Ok(snapshot.len())
    }
}

/// Compute one fusion row from scratch: classical LR expansion of the
/// smaller shape against the larger weight, each term straightened by the
/// affine Weyl group.
fn fusion_row(level: u32, a: &Weight, b: &Weight) -> RowMap {
    let k = a.parts().len();
    let n_mod = k as u32 + level;
    let (big, small) = if a.size() >= b.size() { (a, b) } else { (b, a) };
    let lam = big.parts().to_vec();
    let shape = trim(small.parts());

    let mut acc: HashMap<Weight, i128> = HashMap::new();
    if shape.is_empty() {
        acc.insert(big.clone(), 1);
    } else {
        enumerate_dominant_tableaux(&lam, &shape, k, None, &mut |nu| {
            if let Some((w, sign)) = su_straighten(nu, n_mod) {
                let e = acc.entry(w).or_insert(0);
                *e = e
                    .checked_add(sign as i128)
                    .expect("fusion coefficient overflowed");
            }
        });
    }

    let mut out = RowMap::with_capacity(acc.len());
    for (w, c) in acc {
        match c.cmp(&0) {
            std::cmp::Ordering::Less => {
                panic!("negative fusion coefficient {c} for {w}; straightening bug")
            }
            std::cmp::Ordering::Equal => {}
            std::cmp::Ordering::Greater => {
                out.insert(w, c as u128);
            }
        }
    }
    out
}

/// Exhaustively enumerate all level weights and check a closure; test helper
/// shared by the acceptance suite (exposed for integration tests).
pub fn all_level_weights(r: u32, level: u32) -> Vec<Weight> {
    enumerate_level_weights(r, level)
        .into_iter()
        .map(|lw| lw.weight)
        .collect()
}
