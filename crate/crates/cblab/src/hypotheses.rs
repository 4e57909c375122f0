//! Checks of the four boundary hypotheses behind the geometric
//! interpretation of Delta-invariant-zero families: the parent bundle
//! scales with Delta = 0, the restriction data at each boundary stratum
//! is free, the factorization is quasi rank one, and the socle (the
//! unique factor of rank above one, when present) again scales with
//! Delta = 0 and the same degree as the parent.

use crate::fusion::FusionEngine;
use crate::ranks::{
    enumerate_strata, rank_weights, restriction_data, BoundaryStratum, RestrictionTerm,
};
use crate::scaling::{classify, classify_adaptive, ScalingReport};
use crate::util::matrix_rank;
use crate::weights::{BundleSpec, Weight};
use crate::{rat_int, Error, Rat, Result};
use num_traits::{One, Zero};
use rayon::prelude::*;

/// A list of attaching weights is free when the vectors (fundamental
/// coordinates, 1) are linearly independent over the rationals, i.e. no
/// nonzero rational combination sums to zero with coefficient sum zero.
pub fn is_free(weights: &[Weight]) -> bool {
    let rows: Vec<Vec<Rat>> = weights
        .iter()
        .map(|w| {
            let mut row: Vec<Rat> = w
                .fund_coords()
                .into_iter()
                .map(rat_int)
                .collect();
            row.push(Rat::one());
            row
        })
        .collect();
    matrix_rank(&rows) == weights.len()
}

/// At most one restriction factor has rank product above one.
pub fn is_quasi_rank_one(terms: &[RestrictionTerm]) -> bool {
    terms.iter().filter(|t| t.rank_a * t.rank_b > 1).count() <= 1
}

/// The unique term with rank product above one, if there is exactly one.
/// All products one means there is no socle (vacuous case); two or more
/// offenders also yield `None`, but then quasi-rank-one already fails.
pub fn socle_of(terms: &[RestrictionTerm]) -> Option<&RestrictionTerm> {
    let mut big = terms.iter().filter(|t| t.rank_a * t.rank_b > 1);
    match (big.next(), big.next()) {
        (Some(t), None) => Some(t),
        _ => None,
    }
}

/// Scaling report for a socle, together with the verdict against the
/// parent degree.
#[derive(Clone, Debug)]
pub struct SocleScaling {
    pub mu: Weight,
    /// rank product of the socle term at m = 1.
    pub product: u128,
    pub report: ScalingReport,
    pub samples: Vec<u128>,
    /// Delta = 0 and degree equal to the parent degree.
    pub passed: bool,
}

/// The socle rank sequence value at scaling m: the product of the two
/// side ranks with the socle weight scaled along (a single rank for the
/// non-separating stratum, where the attaching weight and its dual both
/// land on the one component).
pub fn socle_rank_at(
    eng: &FusionEngine,
    spec: &BundleSpec,
    stratum: &BoundaryStratum,
    mu: &Weight,
    m: u32,
) -> Result<u128> {
    let sm = spec.scale(m);
    let mum = mu.scale(m);
    match stratum {
        BoundaryStratum::Irreducible => {
            if spec.genus == 0 {
                return Err(Error::InvalidStratum(
                    "genus 0 has no irreducible boundary stratum".into(),
                ));
            }
            let mut ws = sm.weights.clone();
            ws.push(mum.clone());
            ws.push(mum.dual());
            rank_weights(eng, sm.r, sm.level, sm.genus - 1, &ws)
        }
        BoundaryStratum::Separating { genus: g1, subset } => {
            let mut side_a: Vec<Weight> =
                subset.iter().map(|&i| sm.weights[i].clone()).collect();
            side_a.push(mum.clone());
            let mut side_b: Vec<Weight> = (0..sm.weights.len())
                .filter(|i| !subset.contains(i))
                .map(|i| sm.weights[i].clone())
                .collect();
            side_b.push(mum.dual());
            let ra = rank_weights(eng, sm.r, sm.level, *g1, &side_a)?;
            let rb = rank_weights(eng, sm.r, sm.level, sm.genus - g1, &side_b)?;
            ra.checked_mul(rb)
                .ok_or_else(|| Error::Overflow("socle rank product exceeds u128".into()))
        }
    }
}

/// Classify the socle rank sequence at a stratum and compare its degree
/// with the parent's. Grows the sequence until classification succeeds
/// or `max_m` is reached.
pub fn socle_check(
    eng: &FusionEngine,
    spec: &BundleSpec,
    stratum: &BoundaryStratum,
    socle: &RestrictionTerm,
    parent: &ScalingReport,
    max_m: u32,
) -> Result<SocleScaling> {
    let mut samples = Vec::new();
    let mut last_err = Error::Inconclusive("no socle samples computed".into());
    for m in 1..=max_m.max(1) {
        samples.push(socle_rank_at(eng, spec, stratum, &socle.mu, m)?);
        if samples.len() < 3 {
            continue;
        }
        match classify(&samples) {
            Ok(report) => {
                let passed = report.delta.is_zero() && report.degree == parent.degree;
                return Ok(SocleScaling {
                    mu: socle.mu.clone(),
                    product: socle.rank_a * socle.rank_b,
                    report,
                    samples,
                    passed,
                });
            }
            Err(e @ Error::Inconclusive(_)) => last_err = e,
            Err(e) => return Err(e),
        }
    }
    Err(last_err)
}

/// Everything checked at one boundary stratum.
#[derive(Clone, Debug)]
pub struct StratumReport {
    pub stratum: BoundaryStratum,
    pub terms: Vec<RestrictionTerm>,
    /// Sum of rank products equals the parent rank (re-checked here).
    pub conservation_ok: bool,
    pub free_ok: bool,
    pub quasi_rank_one_ok: bool,
    pub socle: Option<SocleScaling>,
    /// First failing condition, in the order conservation, free,
    /// quasi-rank-one, socle.
    pub failed: Option<&'static str>,
}

impl StratumReport {
    pub fn passed(&self) -> bool {
        self.failed.is_none()
    }
}

/// The aggregated hypothesis report for a bundle.
#[derive(Clone, Debug)]
pub struct HypothesisReport {
    pub parent: ScalingReport,
    pub parent_ranks: Vec<u128>,
    pub strata: Vec<StratumReport>,
    pub overall: bool,
}

fn check_stratum(
    eng: &FusionEngine,
    spec: &BundleSpec,
    stratum: &BoundaryStratum,
    parent: &ScalingReport,
    max_m: u32,
) -> Result<StratumReport> {
    let terms = restriction_data(eng, spec, stratum)?;
    let sum = terms
        .iter()
        .try_fold(0u128, |acc, t| {
            t.rank_a
                .checked_mul(t.rank_b)
                .and_then(|p| acc.checked_add(p))
        })
        .ok_or_else(|| Error::Overflow("restriction rank sum exceeds u128".into()))?;
    let conservation_ok = sum == parent.rank1;
    let attach: Vec<Weight> = terms.iter().map(|t| t.mu.clone()).collect();
    let free_ok = is_free(&attach);
    let quasi_rank_one_ok = is_quasi_rank_one(&terms);
    let socle = match socle_of(&terms) {
        Some(t) if quasi_rank_one_ok => {
            Some(socle_check(eng, spec, stratum, t, parent, max_m)?)
        }
        _ => None,
    };
    let failed = if !conservation_ok {
        Some("conservation")
    } else if !free_ok {
        Some("free")
    } else if !quasi_rank_one_ok {
        Some("quasi-rank-one")
    } else if matches!(&socle, Some(s) if !s.passed) {
        Some("socle-scaling")
    } else {
        None
    };
    Ok(StratumReport {
        stratum: stratum.clone(),
        terms,
        conservation_ok,
        free_ok,
        quasi_rank_one_ok,
        socle,
        failed,
    })
}

/// Run the full hypothesis suite: classify the parent rank scaling, then
/// check conservation, freeness, quasi-rank-one and socle scaling at
/// every boundary stratum of the moduli space. `max_m` bounds every
/// adaptive rank sequence.
#[allow(non_snake_case)]
pub fn check_precisQ(
    eng: &FusionEngine,
    spec: &BundleSpec,
    max_m: u32,
) -> Result<HypothesisReport> {
    let (parent, parent_ranks) = classify_adaptive(eng, spec, max_m)?;
    let strata = enumerate_strata(spec.genus, spec.n())?;
    let reports: Vec<StratumReport> = strata
        .par_iter()
        .map(|s| check_stratum(eng, spec, s, &parent, max_m))
        .collect::<Result<_>>()?;
    let overall = parent.delta.is_zero() && reports.iter().all(|r| r.passed());
    Ok(HypothesisReport {
        parent,
        parent_ranks,
        strata: reports,
        overall,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scaling::ScalingLabel;
    use crate::Int;

    fn w(parts: &[u32]) -> Weight {
        Weight::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn freeness_examples() {
        assert!(is_free(&[Weight::zero(1)]));
        assert!(is_free(&[Weight::zero(1), w(&[2, 0])]));
        assert!(!is_free(&[Weight::zero(1), w(&[1, 0]), w(&[2, 0])]));
        assert!(is_free(&[]));
        // sl4: {0, omega_1 + omega_3, 2 omega_2} is free
        assert!(is_free(&[
            Weight::zero(3),
            w(&[2, 1, 1, 0]),
            w(&[2, 2, 0, 0]),
        ]));
    }

    #[test]
    fn freeness_invariances() {
        let data = [Weight::zero(3), w(&[2, 1, 1, 0]), w(&[3, 1, 0, 0])];
        let forward = is_free(&data);
        let mut rev = data.to_vec();
        rev.reverse();
        assert_eq!(is_free(&rev), forward);
        let duals: Vec<Weight> = data.iter().map(Weight::dual).collect();
        assert_eq!(is_free(&duals), forward);
        // (1,0,1) is the affine midpoint of (1,0,0) and (1,0,2)
        let dep = [w(&[1, 0, 0, 0]), w(&[3, 2, 2, 0]), w(&[2, 1, 1, 0])];
        assert!(!is_free(&dep));
        let dep_duals: Vec<Weight> = dep.iter().map(Weight::dual).collect();
        assert!(!is_free(&dep_duals));
    }

    #[test]
    fn quasi_rank_one_examples() {
        let t = |a: u128, b: u128| RestrictionTerm {
            mu: Weight::zero(1),
            rank_a: a,
            rank_b: b,
        };
        assert!(is_quasi_rank_one(&[t(1, 1), t(1, 1)]));
        assert!(is_quasi_rank_one(&[t(2, 2), t(1, 1), t(1, 1)]));
        assert!(!is_quasi_rank_one(&[t(2, 1), t(1, 2)]));
        assert!(socle_of(&[t(1, 1)]).is_none());
        assert_eq!(
            socle_of(&[t(1, 1), t(2, 2)]).map(|s| s.rank_a * s.rank_b),
            Some(4)
        );
        assert!(socle_of(&[t(2, 1), t(1, 2)]).is_none());
    }

    #[test]
    fn vacuum_genus_two_fails_at_separating_stratum() {
        let eng = FusionEngine::new();
        let spec = BundleSpec::new(1, 1, 2, vec![]).unwrap();
        let report = check_precisQ(&eng, &spec, 6).unwrap();
        assert_eq!(report.parent.dim, 3);
        assert_eq!(report.parent.degree, Int::one());
        assert!(report.parent.delta.is_zero());
        assert_eq!(report.parent.label, ScalingLabel::Projective);
        assert!(!report.overall);
        assert_eq!(report.strata.len(), 2);

        let irr = &report.strata[0];
        assert!(matches!(irr.stratum, BoundaryStratum::Irreducible));
        assert!(irr.conservation_ok && irr.free_ok);
        assert_eq!(irr.failed, Some("quasi-rank-one"));

        let sep = &report.strata[1];
        assert!(matches!(sep.stratum, BoundaryStratum::Separating { .. }));
        assert!(sep.conservation_ok && sep.free_ok && sep.quasi_rank_one_ok);
        assert_eq!(sep.failed, Some("socle-scaling"));
        let socle = sep.socle.as_ref().unwrap();
        assert!(socle.mu.is_zero());
        assert_eq!(socle.product, 4);
        // socle sequence (m+1)^2: dimension 2, degree 2, parent degree 1
        assert_eq!(socle.samples[..3], [4, 9, 16]);
        assert_eq!(socle.report.dim, 2);
        assert_eq!(socle.report.degree, Int::from(2));
        assert!(socle.report.delta.is_zero());
        assert!(!socle.passed);
    }

    #[test]
    fn projective_four_point_family_passes() {
        // sl4, weights (omega_1 + omega_3)^4 at level 2
        let eng = FusionEngine::new();
        let lam = w(&[2, 1, 1, 0]);
        let spec = BundleSpec::new(3, 2, 0, vec![lam; 4]).unwrap();
        let report = check_precisQ(&eng, &spec, 6).unwrap();
        assert!(report.parent.delta.is_zero());
        assert_eq!(report.parent.degree, Int::one());
        assert_eq!(report.parent.label, ScalingLabel::Projective);
        assert_eq!(report.strata.len(), 3);
        for s in &report.strata {
            assert!(s.passed(), "stratum {} failed: {:?}", s.stratum, s.failed);
            assert!(s.socle.is_none());
            assert_eq!(s.terms.len(), 3);
        }
        assert!(report.overall);
    }

    #[test]
    fn genus_one_three_point_family_passes() {
        // sl2, weights {2 omega_1, 3 omega_1, 3 omega_1} at level 3
        let eng = FusionEngine::new();
        let spec =
            BundleSpec::new(1, 3, 1, vec![w(&[2, 0]), w(&[3, 0]), w(&[3, 0])]).unwrap();
        let report = check_precisQ(&eng, &spec, 6).unwrap();
        assert!(report.parent.delta.is_zero());
        assert_eq!(report.parent.degree, Int::one());
        assert_eq!(report.parent.dim, 1);
        assert!(report.overall, "report: {report:?}");
        // the non-separating stratum has two rank-one factors, no socle;
        // every separating stratum has a single socle of product 2 that
        // scales linearly like the parent
        let irr = &report.strata[0];
        assert!(matches!(irr.stratum, BoundaryStratum::Irreducible));
        assert_eq!(irr.terms.len(), 2);
        assert!(irr.socle.is_none());
        let mut socles = 0;
        for s in &report.strata[1..] {
            if let Some(soc) = &s.socle {
                socles += 1;
                assert_eq!(soc.product, 2);
                assert_eq!(soc.report.degree, Int::one());
                assert!(soc.passed);
            }
        }
        assert!(socles > 0);
    }
}
