//! Ranks of conformal-blocks bundles via factorization.
//!
//! Genus 0 uses a caterpillar chain: fold the first `n-1` weights through
//! fusion-product rows, then pair with the last weight. Higher genus peels
//! off one non-separating node at a time, summing over the attaching level
//! weight and its dual. The fold deliberately keeps the weights in their
//! given order; reorderings are a symmetry of the answer and the test suite
//! exercises that symmetry, so the implementation must not normalize it
//! away.

use crate::fusion::FusionEngine;
use crate::weights::{enumerate_level_weights, BundleSpec, Weight};
use crate::{Error, Result};
use rayon::prelude::*;
use std::collections::HashMap;
use std::fmt;

/// Rank of the bundle described by `spec`.
pub fn rank(eng: &FusionEngine, spec: &BundleSpec) -> Result<u128> {
    rank_weights(eng, spec.r, spec.level, spec.genus, &spec.weights)
}

/// Rank from bare data; `weights` all have rank `r` and first part at most
/// `level`.
pub fn rank_weights(
    eng: &FusionEngine,
    r: u32,
    level: u32,
    genus: u32,
    weights: &[Weight],
) -> Result<u128> {
    for w in weights {
        if w.r() != r {
            return Err(Error::InvalidWeight(format!(
                "weight {w} does not have rank {r}"
            )));
        }
        if w.first_part() > level {
            return Err(Error::LevelMismatch(format!(
                "weight {w} exceeds level {level}"
            )));
        }
    }
    if genus > 0 {
        let attach = enumerate_level_weights(r, level);
        let partials: Vec<u128> = attach
            .par_iter()
            .map(|mu| {
                let mut ext = weights.to_vec();
                ext.push(mu.weight.clone());
                ext.push(mu.weight.dual());
                rank_weights(eng, r, level, genus - 1, &ext)
            })
            .collect::<Result<_>>()?;
        return partials
            .into_iter()
            .try_fold(0u128, |a, b| a.checked_add(b))
            .ok_or_else(|| Error::Overflow("rank exceeds u128".into()));
    }
    rank_genus0(eng, level, weights)
}

fn rank_genus0(eng: &FusionEngine, level: u32, weights: &[Weight]) -> Result<u128> {
    match weights.len() {
        0 => return Ok(1),
        1 => return Ok(u128::from(weights[0].is_zero())),
        _ => {}
    }
    // state: coefficient of each V_w in the fusion product of the first i
    // weights; the rank pairs the final state with the last weight's dual
    let (last, init) = weights.split_last().unwrap();
    let mut state: HashMap<Weight, u128> = HashMap::new();
    state.insert(init[0].clone(), 1);
    for lam in &init[1..] {
        state = fold_step(eng, level, &state, lam)?;
    }
    Ok(state.get(&last.dual()).copied().unwrap_or(0))
}

fn fold_step(
    eng: &FusionEngine,
    level: u32,
    state: &HashMap<Weight, u128>,
    lam: &Weight,
) -> Result<HashMap<Weight, u128>> {
    let merge_into = |acc: &mut HashMap<Weight, u128>,
                      w: &Weight,
                      coeff: u128|
     -> Result<()> {
        for (v, c) in eng.row(level, w, lam).iter() {
            let add = coeff
                .checked_mul(*c)
                .ok_or_else(|| Error::Overflow("rank exceeds u128".into()))?;
            let e = acc.entry(v.clone()).or_insert(0);
            *e = e
                .checked_add(add)
                .ok_or_else(|| Error::Overflow("rank exceeds u128".into()))?;
        }
        Ok(())
    };
    if state.len() < 32 {
        let mut next = HashMap::new();
        for (w, &coeff) in state {
            merge_into(&mut next, w, coeff)?;
        }
        Ok(next)
    } else {
        let entries: Vec<(&Weight, &u128)> = state.iter().collect();
        entries
            .par_chunks(state.len().div_ceil(rayon::current_num_threads().max(1)))
            .map(|chunk| {
                let mut local = HashMap::new();
                for (w, &coeff) in chunk {
                    merge_into(&mut local, w, coeff)?;
                }
                Ok(local)
            })
            .try_reduce(HashMap::new, |mut a, b| {
                for (w, c) in b {
                    let e = a.entry(w).or_insert(0);
                    *e = e
                        .checked_add(c)
                        .ok_or_else(|| Error::Overflow("rank exceeds u128".into()))?;
                }
                Ok(a)
            })
    }
}

/// Ranks of the scaled bundles `V[m]` for `m = 1..=max_m`.
pub fn rank_sequence(eng: &FusionEngine, spec: &BundleSpec, max_m: u32) -> Result<Vec<u128>> {
    (1..=max_m)
        .into_par_iter()
        .map(|m| rank(eng, &spec.scale(m)))
        .collect()
}

/// A boundary divisor of the moduli space the bundle lives on. Separating
/// strata record one side: the component of genus `genus` carrying exactly
/// the marked points in `subset` (0-based indices into the spec's weight
/// list, sorted). The recorded side is the canonical one: minimal by
/// (genus, subset size, subset lex order) among the two descriptions.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum BoundaryStratum {
    Irreducible,
    Separating { genus: u32, subset: Vec<usize> },
}

impl fmt::Display for BoundaryStratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundaryStratum::Irreducible => write!(f, "delta_irr"),
            BoundaryStratum::Separating { genus, subset } => {
                let pts: Vec<String> = subset.iter().map(|i| (i + 1).to_string()).collect();
                write!(f, "delta_{{{};{{{}}}}}", genus, pts.join(","))
            }
        }
    }
}

fn canonical_side(g: u32, n: usize, g1: u32, subset: Vec<usize>) -> BoundaryStratum {
    let comp: Vec<usize> = (0..n).filter(|i| !subset.contains(i)).collect();
    let a = (g1, subset.len(), subset);
    let b = (g - g1, comp.len(), comp);
    let (genus, _, subset) = a.min(b);
    BoundaryStratum::Separating { genus, subset }
}

/// All boundary strata of the moduli space of stable genus-`genus` curves
/// with `n` marked points, for genus at most 2. Each separating divisor
/// appears once, in canonical form; strata whose generic curve would be
/// unstable are omitted.
pub fn enumerate_strata(genus: u32, n: usize) -> Result<Vec<BoundaryStratum>> {
    let mut out = Vec::new();
    let subsets = |min_size: usize, max_size: usize| -> Vec<Vec<usize>> {
        let mut subs = Vec::new();
        for mask in 0u64..(1u64 << n) {
            let s: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).collect();
            if s.len() >= min_size && s.len() <= max_size {
                subs.push(s);
            }
        }
        subs
    };
    match genus {
        0 => {
            if n < 4 {
                return Ok(out);
            }
            for s in subsets(2, n - 2) {
                let c = canonical_side(0, n, 0, s);
                if !out.contains(&c) {
                    out.push(c);
                }
            }
        }
        1 => {
            out.push(BoundaryStratum::Irreducible);
            // genus-0 side needs at least two marked points for stability;
            // the genus-1 side is stable with the node alone
            for s in subsets(2, n) {
                out.push(BoundaryStratum::Separating { genus: 0, subset: s });
            }
        }
        2 => {
            out.push(BoundaryStratum::Irreducible);
            for s in subsets(0, n) {
                let c = canonical_side(2, n, 1, s);
                if !out.contains(&c) {
                    out.push(c);
                }
            }
            for s in subsets(2, n) {
                out.push(BoundaryStratum::Separating { genus: 0, subset: s });
            }
        }
        _ => {
            return Err(Error::InvalidStratum(format!(
                "stratum enumeration supports genus <= 2, got {genus}"
            )))
        }
    }
    out.sort();
    Ok(out)
}

/// Restriction of the bundle to a boundary stratum: one term per attaching
/// level weight with nonzero contribution. For a separating stratum the
/// pair is (rank on the recorded side with `mu`, rank on the other side
/// with `mu*`); for the irreducible stratum the component is one curve of
/// genus `g-1` meeting itself, `mu` and `mu*` both attach there, and the
/// second entry is 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RestrictionTerm {
    pub mu: Weight,
    pub rank_a: u128,
    pub rank_b: u128,
}

pub fn restriction_data(
    eng: &FusionEngine,
    spec: &BundleSpec,
    stratum: &BoundaryStratum,
) -> Result<Vec<RestrictionTerm>> {
    let attach = enumerate_level_weights(spec.r, spec.level);
    let mut out = Vec::new();
    match stratum {
        BoundaryStratum::Irreducible => {
            if spec.genus == 0 {
                return Err(Error::InvalidStratum(
                    "genus 0 has no irreducible boundary stratum".into(),
                ));
            }
            for mu in &attach {
                let mut ws = spec.weights.clone();
                ws.push(mu.weight.clone());
                ws.push(mu.weight.dual());
                let r = rank_weights(eng, spec.r, spec.level, spec.genus - 1, &ws)?;
                if r > 0 {
                    out.push(RestrictionTerm {
                        mu: mu.weight.clone(),
                        rank_a: r,
                        rank_b: 1,
                    });
                }
            }
        }
        BoundaryStratum::Separating { genus: g1, subset } => {
            if *g1 > spec.genus {
                return Err(Error::InvalidStratum(format!(
                    "side genus {g1} exceeds total genus {}",
                    spec.genus
                )));
            }
            if subset.iter().any(|&i| i >= spec.weights.len()) {
                return Err(Error::InvalidStratum(format!(
                    "stratum {stratum} references a marked point outside 1..={}",
                    spec.weights.len()
                )));
            }
            let side_a: Vec<Weight> = subset.iter().map(|&i| spec.weights[i].clone()).collect();
            let side_b: Vec<Weight> = (0..spec.weights.len())
                .filter(|i| !subset.contains(i))
                .map(|i| spec.weights[i].clone())
                .collect();
            for mu in &attach {
                let mut wa = side_a.clone();
                wa.push(mu.weight.clone());
                let ra = rank_weights(eng, spec.r, spec.level, *g1, &wa)?;
                if ra == 0 {
                    continue;
                }
                let mut wb = side_b.clone();
                wb.push(mu.weight.dual());
                let rb =
                    rank_weights(eng, spec.r, spec.level, spec.genus - *g1, &wb)?;
                if rb > 0 {
                    out.push(RestrictionTerm {
                        mu: mu.weight.clone(),
                        rank_a: ra,
                        rank_b: rb,
                    });
                }
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fusion::{all_level_weights, fuse3_sl2_oracle};
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};

    fn w(parts: &[u32]) -> Weight {
        Weight::new(parts.to_vec()).unwrap()
    }

    fn sl2_spec(parts: &[u32], level: u32, genus: u32) -> BundleSpec {
        let ws = parts.iter().map(|&a| w(&[a, 0])).collect();
        BundleSpec::new(1, level, genus, ws).unwrap()
    }

    #[test]
    fn small_n_bases() {
        let eng = FusionEngine::new();
        assert_eq!(rank(&eng, &sl2_spec(&[], 2, 0)).unwrap(), 1);
        assert_eq!(rank(&eng, &sl2_spec(&[0], 2, 0)).unwrap(), 1);
        assert_eq!(rank(&eng, &sl2_spec(&[1], 2, 0)).unwrap(), 0);
        assert_eq!(rank(&eng, &sl2_spec(&[1, 1], 2, 0)).unwrap(), 1);
        assert_eq!(rank(&eng, &sl2_spec(&[1, 2], 2, 0)).unwrap(), 0);
        // n = 3 is a bare three-point number
        assert_eq!(rank(&eng, &sl2_spec(&[1, 1, 2], 2, 0)).unwrap(), 1);
        assert_eq!(rank(&eng, &sl2_spec(&[2, 2, 2], 2, 0)).unwrap(), 0);
        assert_eq!(rank(&eng, &sl2_spec(&[2, 2, 2], 3, 0)).unwrap(), 1);
    }

    #[test]
    fn four_point_sl2_matches_oracle_convolution() {
        let eng = FusionEngine::new();
        for level in 1..=4u32 {
            for a in 0..=level {
                for b in 0..=level {
                    for c in 0..=level {
                        for d in 0..=level {
                            let want: u128 = (0..=level)
                                .map(|e| {
                                    fuse3_sl2_oracle(a, b, e, level)
                                        * fuse3_sl2_oracle(e, c, d, level)
                                })
                                .sum();
                            let got = rank(&eng, &sl2_spec(&[a, b, c, d], level, 0)).unwrap();
                            assert_eq!(got, want, "rank({a},{b},{c},{d}) level {level}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn unit_rank_example() {
        let eng = FusionEngine::new();
        assert_eq!(rank(&eng, &sl2_spec(&[1, 1, 1, 1], 1, 0)).unwrap(), 1);
    }

    #[test]
    fn permutation_invariance() {
        let eng = FusionEngine::new();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            let r = rng.gen_range(1..=3u32);
            let level = rng.gen_range(1..=3u32);
            let n = rng.gen_range(4..=6usize);
            let pool = all_level_weights(r, level);
            let mut ws: Vec<Weight> = (0..n)
                .map(|_| pool[rng.gen_range(0..pool.len())].clone())
                .collect();
            let spec = BundleSpec::new(r, level, 0, ws.clone()).unwrap();
            let base = rank(&eng, &spec).unwrap();
            ws.shuffle(&mut rng);
            let spec2 = BundleSpec::new(r, level, 0, ws).unwrap();
            assert_eq!(base, rank(&eng, &spec2).unwrap());
        }
    }

    #[test]
    fn genus_one_closed_forms() {
        let eng = FusionEngine::new();
        // no insertions: one block per level weight
        for level in 1..=5u32 {
            let spec = BundleSpec::new(1, level, 1, vec![]).unwrap();
            assert_eq!(rank(&eng, &spec).unwrap(), (level + 1) as u128);
        }
        for r in 1..=3u32 {
            for level in 1..=3u32 {
                let spec = BundleSpec::new(r, level, 1, vec![]).unwrap();
                assert_eq!(
                    rank(&eng, &spec).unwrap(),
                    all_level_weights(r, level).len() as u128
                );
            }
        }
        // one insertion a*omega_1 at level l: rank l+1-a for even a, else 0
        for level in 1..=6u32 {
            for a in 0..=level {
                let spec = sl2_spec(&[a], level, 1);
                let want = if a % 2 == 0 { (level + 1 - a) as u128 } else { 0 };
                assert_eq!(rank(&eng, &spec).unwrap(), want, "a={a} level={level}");
            }
        }
    }

    #[test]
    fn genus_two_vacuum_level_one() {
        let eng = FusionEngine::new();
        let spec = BundleSpec::new(1, 1, 2, vec![]).unwrap();
        assert_eq!(rank(&eng, &spec).unwrap(), 4);
        // scaled: binomial(m+3, 3)
        let seq = rank_sequence(&eng, &spec, 5).unwrap();
        assert_eq!(seq, vec![4, 10, 20, 35, 56]);
    }

    #[test]
    fn strata_enumeration_counts() {
        assert_eq!(enumerate_strata(0, 4).unwrap().len(), 3);
        assert_eq!(enumerate_strata(0, 5).unwrap().len(), 10);
        assert_eq!(enumerate_strata(0, 6).unwrap().len(), 25);
        assert_eq!(
            enumerate_strata(1, 1).unwrap(),
            vec![BoundaryStratum::Irreducible]
        );
        assert_eq!(enumerate_strata(1, 2).unwrap().len(), 2);
        let m2 = enumerate_strata(2, 0).unwrap();
        assert_eq!(
            m2,
            vec![
                BoundaryStratum::Irreducible,
                BoundaryStratum::Separating { genus: 1, subset: vec![] }
            ]
        );
        assert_eq!(enumerate_strata(2, 1).unwrap().len(), 2);
        assert!(enumerate_strata(3, 0).is_err());
    }

    #[test]
    fn stratum_display() {
        assert_eq!(BoundaryStratum::Irreducible.to_string(), "delta_irr");
        assert_eq!(
            BoundaryStratum::Separating { genus: 0, subset: vec![0, 2] }.to_string(),
            "delta_{0;{1,3}}"
        );
    }

    #[test]
    fn factorization_conserves_rank() {
        let eng = FusionEngine::new();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        for _ in 0..30 {
            let r = rng.gen_range(1..=2u32);
            let level = rng.gen_range(1..=3u32);
            let genus = rng.gen_range(0..=2u32);
            let n = rng.gen_range(if genus == 0 { 4 } else { 0 }..=5usize);
            let pool = all_level_weights(r, level);
            let ws: Vec<Weight> = (0..n)
                .map(|_| pool[rng.gen_range(0..pool.len())].clone())
                .collect();
            let spec = BundleSpec::new(r, level, genus, ws).unwrap();
            let total = rank(&eng, &spec).unwrap();
            for stratum in enumerate_strata(genus, n).unwrap() {
                let data = restriction_data(&eng, &spec, &stratum).unwrap();
                let sum: u128 = data.iter().map(|t| t.rank_a * t.rank_b).sum();
                assert_eq!(sum, total, "stratum {stratum} of {spec:?}");
            }
        }
    }

    #[test]
    fn restriction_example_vacuum_genus2() {
        // level-1 vacuum bundle on the moduli of genus-2 curves
        let eng = FusionEngine::new();
        let spec = BundleSpec::new(1, 1, 2, vec![]).unwrap();
        let irr = restriction_data(&eng, &spec, &BoundaryStratum::Irreducible).unwrap();
        assert_eq!(
            irr,
            vec![
                RestrictionTerm { mu: w(&[0, 0]), rank_a: 2, rank_b: 1 },
                RestrictionTerm { mu: w(&[1, 0]), rank_a: 2, rank_b: 1 },
            ]
        );
        let sep = restriction_data(
            &eng,
            &spec,
            &BoundaryStratum::Separating { genus: 1, subset: vec![] },
        )
        .unwrap();
        assert_eq!(
            sep,
            vec![RestrictionTerm { mu: w(&[0, 0]), rank_a: 2, rank_b: 2 }]
        );
    }
}
