//! Acceptance gate: twelve end-to-end criteria over the published family
//! data, printed one verdict line each. The process exits nonzero when any
//! criterion fails, so `cargo test` stays red as long as a criterion is
//! violated. Two criteria (8 and 9) assert recorded class-table identities
//! verbatim and fail against the embedded tables themselves; the verdict
//! lines carry the computed values. See the README data notes.

use cblab::chern::{c1_fvector, c1_genus1, deg_m04, elliptic_sum, paper_table, PaperFamily};
use cblab::fusion::FusionEngine;
use cblab::hypotheses::check_precisQ;
use cblab::picard::{basis5_coords_from_pairings, m3_in_h_delta1_span, DivisorClassSmall, SmallSpace};
use cblab::ranks::{rank, rank_sequence, rank_weights};
use cblab::repro::{
    elliptic_projective_family, projective_family, qhs_family, scroll_family,
    twisted_cubic_family, veronese_family,
};
use cblab::scaling::{
    anomaly_m2_level1, beta_closed, classify_adaptive, identity_coeffs, identity_coeffs_closed,
    identity_coeffs_general, verify_identity, IdentityKind, ScalingLabel,
};
use cblab::util::{binomial, rat_to_string};
use cblab::weights::{BundleSpec, Weight};
use cblab::{rat, rat_int, Int, Rat};
use num_traits::{One, Zero};
use std::time::Instant;

type Verdict = Result<String, String>;

fn ensure(cond: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(detail())
    }
}

fn lib<T>(r: cblab::Result<T>) -> Result<T, String> {
    r.map_err(|e| format!("internal error: {e}"))
}

fn w2(a: u32) -> Weight {
    Weight::new(vec![a, 0]).expect("rank-one weight")
}

fn basis_coords(eng: &FusionEngine, spec: &BundleSpec) -> Result<Vec<Rat>, String> {
    let ints = lib(c1_fvector(eng, spec))?;
    let pairings: Vec<Rat> = ints.into_iter().map(rat_int).collect();
    lib(basis5_coords_from_pairings(&pairings))
}

fn fmt_rats(v: &[Rat]) -> String {
    let parts: Vec<String> = v.iter().map(rat_to_string).collect();
    format!("({})", parts.join(", "))
}

// 1. Genus-2 vacuum at level 2: the degeneration degree sum is 4 with
//    exactly three nonzero four-point terms of degrees 1, 1, 2, while the
//    naive scaling of the level-1 value predicts binomial(5,4) = 5; rank
//    sums match binomial(m+3,3) for m <= 5; the elliptic-tail pairing sum
//    at level 2 is -19/12.
fn criterion_01(eng: &FusionEngine) -> Verdict {
    let mut total = Int::zero();
    let mut nonzero = Vec::new();
    for lam in 0..=2u32 {
        for mu in 0..=2u32 {
            let d = lib(deg_m04(eng, 1, 2, &[w2(lam), w2(lam), w2(mu), w2(mu)]))?;
            if !d.is_zero() {
                nonzero.push(((lam, mu), d.clone()));
            }
            total += d;
        }
    }
    ensure(total == Int::from(4), || format!("degree sum {total}, wanted 4"))?;
    let want: Vec<((u32, u32), Int)> = vec![
        ((1, 2), Int::one()),
        ((2, 1), Int::one()),
        ((2, 2), Int::from(2)),
    ];
    ensure(nonzero == want, || format!("nonzero terms {nonzero:?}"))?;
    let mut level1 = Int::zero();
    for lam in 0..=1u32 {
        for mu in 0..=1u32 {
            level1 += lib(deg_m04(eng, 1, 1, &[w2(lam), w2(lam), w2(mu), w2(mu)]))?;
        }
    }
    let predicted = binomial(5, 4) * &level1;
    ensure(level1 == Int::one() && predicted == Int::from(5), || {
        format!("level-1 sum {level1}, scaled prediction {predicted}")
    })?;
    for m in 1..=5u32 {
        let mut rs: u128 = 0;
        for lam in 0..=m {
            for mu in 0..=m {
                rs += lib(rank_weights(
                    eng,
                    1,
                    m,
                    0,
                    &[w2(lam), w2(lam), w2(mu), w2(mu)],
                ))?;
            }
        }
        let n = m as u128;
        let want = (n + 3) * (n + 2) * (n + 1) / 6;
        ensure(rs == want, || {
            format!("four-point rank sum at m = {m}: {rs}, wanted {want}")
        })?;
    }
    let e = elliptic_sum(2);
    ensure(e == rat(-19, 12), || {
        format!("elliptic pairing sum {} at level 2, wanted -19/12", rat_to_string(&e))
    })?;
    Ok("degree sum 4 (terms 1, 1, 2) vs scaled prediction 5; rank sums match for m <= 5; \
        elliptic pairing -19/12"
        .into())
}

// 2. Genus-2 level-one anomaly: alpha(m) = 0 and beta = 1, 4, 11, 24, 46,
//    80 for m = 2..7, agreeing with the closed form.
fn criterion_02(eng: &FusionEngine) -> Verdict {
    let want = [1i64, 4, 11, 24, 46, 80];
    for m in 2..=7u32 {
        let a = lib(anomaly_m2_level1(eng, m))?;
        ensure(a.alpha.is_zero(), || {
            format!("alpha({m}) = {}, wanted 0", rat_to_string(&a.alpha))
        })?;
        let stated = rat(want[m as usize - 2], 1);
        ensure(a.beta == stated && a.beta == beta_closed(m), || {
            format!(
                "beta({m}) = {}, stated {} (closed form {})",
                rat_to_string(&a.beta),
                rat_to_string(&stated),
                rat_to_string(&beta_closed(m))
            )
        })?;
    }
    Ok("alpha = 0 and beta = 1, 4, 11, 24, 46, 80 for m = 2..7, matching the closed form".into())
}

// 3. Five-point scroll family: basis vectors 2, 9, 24, 50 times
//    (delta_14 + delta_25 + delta_35) for m = 1..4, and the degree-3
//    identity closes at m = 4 with coefficients (10, -10, 5).
fn criterion_03(eng: &FusionEngine) -> Verdict {
    let spec = scroll_family();
    let ranks = lib(rank_sequence(eng, &spec, 4))?;
    let want_ranks: Vec<u128> = (1..=4u128).map(|m| (m + 1) * (2 + 3 * m) / 2).collect();
    ensure(ranks == want_ranks, || format!("ranks {ranks:?}, wanted {want_ranks:?}"))?;
    let mut vecs = Vec::new();
    for m in 1..=4u32 {
        vecs.push(basis_coords(eng, &spec.scale(m))?);
    }
    let gens = [2i64, 9, 24, 50];
    for (m, (v, c)) in vecs.iter().zip(gens).enumerate() {
        let want: Vec<Rat> = [0i64, 1, 0, 1, 1].iter().map(|&x| rat(x * c, 1)).collect();
        ensure(v == &want, || {
            format!("m = {}: vector {}, wanted {} x (0,1,0,1,1)", m + 1, fmt_rats(v), c)
        })?;
    }
    let coeffs = lib(identity_coeffs_closed(IdentityKind::Scroll12, 4))?;
    let want_coeffs = vec![(1u32, rat(10, 1)), (2, rat(-10, 1)), (3, rat(5, 1))];
    ensure(coeffs == want_coeffs, || format!("coefficients {coeffs:?}"))?;
    let (ok, res) = lib(verify_identity(&coeffs, &vecs[..3], &vecs[3]))?;
    ensure(ok, || format!("residual {}", fmt_rats(&res)))?;
    Ok("vectors 2, 9, 24, 50 x (0,1,0,1,1); identity (10, -10, 5) closes at m = 4".into())
}

// 4. Five-point Veronese family: the five recorded basis vectors for
//    m = 1..5 and the degree-4 identity at m = 5 with (-15, 20, -15, 6).
fn criterion_04(eng: &FusionEngine) -> Verdict {
    let spec = veronese_family();
    let ranks = lib(rank_sequence(eng, &spec, 5))?;
    let want_ranks: Vec<u128> = (1..=5u128).map(|m| (m + 1) * (2 * m + 1)).collect();
    ensure(ranks == want_ranks, || format!("ranks {ranks:?}, wanted {want_ranks:?}"))?;
    let stated: [[i64; 5]; 5] = [
        [0, 1, 2, 1, 3],
        [0, 4, 11, 4, 15],
        [0, 10, 32, 10, 42],
        [0, 20, 70, 20, 90],
        [0, 35, 130, 35, 165],
    ];
    let mut vecs = Vec::new();
    for m in 1..=5u32 {
        let v = basis_coords(eng, &spec.scale(m))?;
        let want: Vec<Rat> = stated[m as usize - 1].iter().map(|&x| rat(x, 1)).collect();
        ensure(v == want, || {
            format!("m = {m}: vector {}, recorded {:?}", fmt_rats(&v), stated[m as usize - 1])
        })?;
        vecs.push(v);
    }
    let coeffs = lib(identity_coeffs_closed(IdentityKind::Veronese, 5))?;
    let want_coeffs = vec![
        (1u32, rat(-15, 1)),
        (2, rat(20, 1)),
        (3, rat(-15, 1)),
        (4, rat(6, 1)),
    ];
    ensure(coeffs == want_coeffs, || format!("coefficients {coeffs:?}"))?;
    let (ok, res) = lib(verify_identity(&coeffs, &vecs[..4], &vecs[4]))?;
    ensure(ok, || format!("residual {}", fmt_rats(&res)))?;
    Ok("all five recorded vectors match; identity (-15, 20, -15, 6) closes at m = 5".into())
}

// 5. Four-point projective families (omega_i + omega_{r+1-i} four times at
//    level 2): rank binomial(d+m, m) with d = 2i, degree d(d+1)/2 at
//    m = 1, degree binomial(m+d, d+1) binomial(d+1, 2) at m <= 3, and c1
//    scaling by exactly binomial(m+d, d+1).
fn criterion_05(eng: &FusionEngine) -> Verdict {
    for (r, i) in [(3u32, 1u32), (4, 1), (5, 1), (6, 1), (7, 1), (7, 2)] {
        let d = 2 * i as i64;
        let spec = lib(projective_family(r, i))?;
        let base = lib(c1_fvector(eng, &spec))?;
        ensure(base[0] == binomial(d + 1, 2), || {
            format!(
                "(r, i) = ({r}, {i}): degree {} at m = 1, wanted d(d+1)/2 = {}",
                base[0],
                d * (d + 1) / 2
            )
        })?;
        for m in 1..=3u32 {
            let sm = spec.scale(m);
            let rk = lib(rank(eng, &sm))?;
            let want_rank = binomial(d + m as i64, m as i64);
            ensure(Int::from(rk) == want_rank, || {
                format!("(r, i) = ({r}, {i}), m = {m}: rank {rk}, wanted {want_rank}")
            })?;
            let v = lib(c1_fvector(eng, &sm))?;
            let factor = binomial(m as i64 + d, d + 1);
            ensure(v[0] == &factor * &base[0], || {
                format!(
                    "(r, i) = ({r}, {i}), m = {m}: c1 pairing {} is not {} x {}",
                    v[0], factor, base[0]
                )
            })?;
            let want_deg = &factor * binomial(d + 1, 2);
            ensure(v[0] == want_deg, || {
                format!("(r, i) = ({r}, {i}), m = {m}: degree {}, wanted {want_deg}", v[0])
            })?;
        }
    }
    Ok("six (r, i) pairs: ranks binomial(d+m, m), degrees binomial(m+d, d+1) d(d+1)/2, \
        and exact c1 proportionality for m <= 3"
        .into())
}

// 6. Five-point quadric family: ranks 2 binomial(m+2,3) + binomial(m+2,2)
//    for m <= 3, classified as a quadric threefold of degree 2 with
//    delta = 0, and the elimination generator agrees with the closed
//    quadric coefficients for m <= 8. The stated generator seed R = 6
//    contradicts f(1) = 5 for this family; R = f(1) = 5 is forced and the
//    dimension-3 closed form is the comparison target.
fn criterion_06(eng: &FusionEngine) -> Verdict {
    let spec = qhs_family();
    let ranks = lib(rank_sequence(eng, &spec, 3))?;
    let want: Vec<u128> = vec![5, 14, 30];
    ensure(ranks == want, || format!("ranks {ranks:?}, wanted {want:?}"))?;
    let (report, _) = lib(classify_adaptive(eng, &spec, 6))?;
    ensure(
        report.dim == 3
            && report.degree == Int::from(2)
            && report.delta.is_zero()
            && report.label == ScalingLabel::Quadric,
        || {
            format!(
                "classified (dim {}, degree {}, delta {}, label {})",
                report.dim,
                report.degree,
                report.delta,
                report.label.id()
            )
        },
    )?;
    for m in 1..=8u32 {
        let gen = lib(identity_coeffs_general(5, 2, m))?;
        let closed = lib(identity_coeffs_closed(IdentityKind::Quadric { dim: 3 }, m))?;
        ensure(gen == closed, || {
            format!("m = {m}: generator {gen:?} vs closed {closed:?}")
        })?;
    }
    Ok("ranks 5, 14, 30; classified quadric (dim 3, degree 2, delta 0); generator with \
        R = f(1) = 5 matches the closed form for m <= 8 (stated seed R = 6 is a typo: \
        f(1) = 5 for this family)"
        .into())
}

// 7. Rank-one fusion oracle: engine coefficients equal the parity/triangle/
//    level rule for every triple, exhaustively. Levels <= 6 alone give 784
//    triples, so levels <= 13 are swept to honor the stated 10^4 count.
fn criterion_07(eng: &FusionEngine) -> Verdict {
    fn oracle(level: u32, a: u32, b: u32, c: u32) -> u128 {
        let s = a + b + c;
        let max = a.max(b).max(c);
        if s.is_multiple_of(2) && 2 * max <= s && s <= 2 * level {
            1
        } else {
            0
        }
    }
    let mut checked: u64 = 0;
    for level in 0..=13u32 {
        for a in 0..=level {
            for b in 0..=level {
                for c in 0..=level {
                    let got = eng.fuse3_weights(level, &w2(a), &w2(b), &w2(c));
                    let want = oracle(level, a, b, c);
                    ensure(got == want, || {
                        format!("N({a}, {b}, {c}) at level {level}: engine {got}, oracle {want}")
                    })?;
                    checked += 1;
                }
            }
        }
    }
    ensure(checked > 10_000, || format!("only {checked} triples checked"))?;
    Ok(format!(
        "{checked} exhaustive triples match for levels <= 13 (levels <= 6 alone would \
         give 784, below the stated 10^4)"
    ))
}

// 8. Genus-3 embedded class table: the seven recorded combination
//    identities, asserted verbatim, e.g. 9 c1(V[1]) - c1(V[2]) =
//    H + 6 delta_1 up to 118305 c1(V[1]) - 792 c1(V[4]) + c1(V[9]) =
//    25080 H + 121176 delta_1.
fn criterion_08(_eng: &FusionEngine) -> Verdict {
    let table = paper_table(PaperFamily::M3Quartic);
    type Relation = (u32, &'static [(usize, i64)], (i64, i64));
    let relations: [Relation; 7] = [
        (2, &[(1, 9), (2, -1)], (1, 6)),
        (3, &[(1, 45), (3, -1)], (8, 8)),
        (5, &[(1, 826), (4, -8), (5, 1)], (168, 824)),
        (6, &[(1, 4662), (4, -36), (6, 1)], (966, 3384)),
        (7, &[(1, 16842), (4, -120), (7, 1)], (3528, 17112)),
        (8, &[(1, 48180), (4, -330), (8, 1)], (10164, 49174)),
        (9, &[(1, 118305), (4, -792), (9, 1)], (25080, 121176)),
    ];
    let mut bad = Vec::new();
    for (m, combo, (wa, wb)) in relations {
        let mut acc = DivisorClassSmall::zero(SmallSpace::M3);
        for (j, c) in combo {
            let mut t = table[j - 1].clone();
            t.scale(&rat(*c, 1));
            acc.add_class(&t);
        }
        let (a, b) = lib(m3_in_h_delta1_span(&acc))?;
        if a != rat(wa, 1) || b != rat(wb, 1) {
            bad.push(format!(
                "m = {m}: computed {}H + {}delta_1, recorded {wa}H + {wb}delta_1",
                rat_to_string(&a),
                rat_to_string(&b)
            ));
        }
    }
    if bad.is_empty() {
        Ok("all seven recorded combination identities hold over the embedded table".into())
    } else {
        Err(format!(
            "{} of 7 recorded identities disagree with the embedded classes they cite: {}",
            bad.len(),
            bad.join("; ")
        ))
    }
}

// 9. Genus-2 embedded class table: the anomaly classes of the conjectural
//    identity, asserted verbatim as D_2 = 9 delta_1, D_4 = 279 delta_1,
//    D_5 = 1020 delta_1 in the fixed predicted-minus-actual orientation.
fn criterion_09(_eng: &FusionEngine) -> Verdict {
    let table = paper_table(PaperFamily::M2Cubic);
    let stated = [(2u32, 9i64), (4, 279), (5, 1020)];
    let mut bad = Vec::new();
    for (m, mult) in stated {
        let coeffs = lib(identity_coeffs(IdentityKind::CobleCubic, m))?;
        let (_, residual) = lib(verify_identity(&coeffs, &table, &table[m as usize - 1]))?;
        let red = residual.reduced();
        let want = vec![Rat::zero(), rat(mult, 1)];
        if red != want {
            bad.push(format!(
                "m = {m}: residual reduces to ({}, {}) over (delta_irr, delta_1), recorded (0, {mult})",
                rat_to_string(&red[0]),
                rat_to_string(&red[1])
            ));
        }
    }
    if bad.is_empty() {
        Ok("anomaly multiples 9, 279, 1020 of delta_1 as recorded".into())
    } else {
        Err(format!(
            "{} of 3 recorded anomaly classes disagree with the embedded table: {}",
            bad.len(),
            bad.join("; ")
        ))
    }
}

// 10. Genus-2 one-pointed embedded table: four recorded combinations
//     vanish after eliminating lambda by the standard relation, and the
//     identity coefficients at m = 3, 5, 6, 7 take the recorded values.
fn criterion_10(_eng: &FusionEngine) -> Verdict {
    let table = paper_table(PaperFamily::M21TwoQuadrics);
    let combos: [(u32, &[(usize, i64)]); 4] = [
        (3, &[(1, -16), (2, 6), (3, -1)]),
        (5, &[(1, 225), (2, -70), (4, 6), (5, -1)]),
        (6, &[(1, 1036), (2, -315), (4, 21), (6, -1)]),
        (7, &[(1, 3080), (2, -924), (4, 56), (7, -1)]),
    ];
    for (m, combo) in combos {
        let mut acc = DivisorClassSmall::zero(SmallSpace::M21);
        for (j, c) in combo {
            let mut t = table[j - 1].clone();
            t.scale(&rat(*c, 1));
            acc.add_class(&t);
        }
        ensure(acc.is_zero(), || {
            let red = acc.reduced();
            format!("combination at m = {m} reduces to {}", fmt_rats(&red))
        })?;
    }
    let stated: [(u32, [i64; 3]); 4] = [
        (3, [-16, 6, 0]),
        (5, [225, -70, 6]),
        (6, [1036, -315, 21]),
        (7, [3080, -924, 56]),
    ];
    for (m, vals) in stated {
        let coeffs = lib(identity_coeffs(IdentityKind::TwoQuadrics, m))?;
        let want = vec![
            (1u32, rat(vals[0], 1)),
            (2, rat(vals[1], 1)),
            (4, rat(vals[2], 1)),
        ];
        ensure(coeffs == want, || format!("m = {m}: coefficients {coeffs:?}"))?;
    }
    Ok("four recorded combinations vanish; coefficients at m = 3, 5, 6, 7 as recorded".into())
}

// 11. One-pointed genus-1 twisted-cubic families (weight 2k, level 2k+3):
//     rank 3m+1 and degree -m(3m+1)(k+3)/12 for k <= 3, m <= 4, and the
//     curve identity closes exactly at m = 4 with (4, -6, 4).
fn criterion_11(eng: &FusionEngine) -> Verdict {
    for k in 1..=3u32 {
        let spec = lib(twisted_cubic_family(k))?;
        for m in 1..=4u32 {
            let sm = spec.scale(m);
            let rk = lib(rank(eng, &sm))?;
            let want_rank = (3 * m + 1) as u128;
            ensure(rk == want_rank, || {
                format!("k = {k}, m = {m}: rank {rk}, wanted {want_rank}")
            })?;
            let deg = c1_genus1(2 * k * m, (2 * k + 3) * m);
            let mi = m as i64;
            let want_deg = rat(-mi * (3 * mi + 1) * (k as i64 + 3), 12);
            ensure(deg == want_deg, || {
                format!(
                    "k = {k}, m = {m}: degree {}, wanted {}",
                    rat_to_string(&deg),
                    rat_to_string(&want_deg)
                )
            })?;
        }
        let classes: Vec<Rat> = (1..=3u32)
            .map(|j| c1_genus1(2 * k * j, (2 * k + 3) * j))
            .collect();
        let target = c1_genus1(8 * k, 4 * (2 * k + 3));
        let coeffs = lib(identity_coeffs(IdentityKind::P1O3, 4))?;
        let want_coeffs = vec![(1u32, rat(4, 1)), (2, rat(-6, 1)), (3, rat(4, 1))];
        ensure(coeffs == want_coeffs, || format!("coefficients {coeffs:?}"))?;
        let (ok, res) = lib(verify_identity(&coeffs, &classes, &target))?;
        ensure(ok, || format!("k = {k}: residual {}", rat_to_string(&res)))?;
    }
    Ok("ranks 3m+1, degrees -m(3m+1)(k+3)/12, and the (4, -6, 4) identity closes for k <= 3".into())
}

// 12. Boundary-hypothesis suite: the genus-2 level-1 vacuum family fails
//     exactly at socle scaling (socle degree 2 against parent degree 1);
//     the four-point projective family passes all four conditions; the
//     genus-1 level-(2k+1) families pass for k <= 2, n <= 4.
fn criterion_12(eng: &FusionEngine) -> Verdict {
    let vacuum = lib(BundleSpec::new(1, 1, 2, vec![]))?;
    let hr = lib(check_precisQ(eng, &vacuum, 6))?;
    ensure(!hr.overall, || "vacuum genus-2 family unexpectedly passed".into())?;
    let sep = hr
        .strata
        .iter()
        .find(|s| s.failed == Some("socle-scaling"))
        .ok_or_else(|| {
            let failures: Vec<String> = hr
                .strata
                .iter()
                .filter_map(|s| s.failed.map(|f| format!("{}: {f}", s.stratum)))
                .collect();
            format!("no socle-scaling failure; failures were [{}]", failures.join(", "))
        })?;
    let socle = sep
        .socle
        .as_ref()
        .ok_or_else(|| "failing stratum carries no socle report".to_string())?;
    ensure(
        socle.report.degree == Int::from(2) && hr.parent.degree == Int::one(),
        || {
            format!(
                "socle degree {} against parent degree {}",
                socle.report.degree, hr.parent.degree
            )
        },
    )?;
    let proj = lib(projective_family(3, 1))?;
    let hr2 = lib(check_precisQ(eng, &proj, 6))?;
    ensure(hr2.overall, || {
        let failures: Vec<String> = hr2
            .strata
            .iter()
            .filter_map(|s| s.failed.map(|f| format!("{}: {f}", s.stratum)))
            .collect();
        format!("four-point projective family failed: [{}]", failures.join(", "))
    })?;
    for k in 1..=2u32 {
        for n in 1..=4usize {
            let spec = lib(elliptic_projective_family(k, n))?;
            let hr3 = lib(check_precisQ(eng, &spec, 6))?;
            ensure(hr3.overall, || {
                let failures: Vec<String> = hr3
                    .strata
                    .iter()
                    .filter_map(|s| s.failed.map(|f| format!("{}: {f}", s.stratum)))
                    .collect();
                format!("k = {k}, n = {n} failed: [{}]", failures.join(", "))
            })?;
        }
    }
    Ok("vacuum family fails at socle scaling (degree 2 vs 1); projective and genus-1 \
        families pass all four conditions"
        .into())
}

fn main() {
    type Criterion = (u32, &'static str, fn(&FusionEngine) -> Verdict);
    let criteria: [Criterion; 12] = [
        (1, "genus-2 vacuum degree counterexample", criterion_01),
        (2, "genus-2 level-one anomaly closed form", criterion_02),
        (3, "five-point scroll family", criterion_03),
        (4, "five-point Veronese family", criterion_04),
        (5, "four-point projective families", criterion_05),
        (6, "five-point quadric family", criterion_06),
        (7, "exhaustive rank-one fusion oracle", criterion_07),
        (8, "genus-3 embedded-table relations", criterion_08),
        (9, "genus-2 embedded-table anomalies", criterion_09),
        (10, "one-pointed genus-2 embedded-table combinations", criterion_10),
        (11, "one-pointed genus-1 twisted-cubic families", criterion_11),
        (12, "boundary-hypothesis suite", criterion_12),
    ];
    let eng = FusionEngine::new();
    let mut failed = 0u32;
    for (n, what, run) in criteria {
        let t = Instant::now();
        let verdict = run(&eng);
        let secs = t.elapsed().as_secs_f64();
        match verdict {
            Ok(detail) => println!("criterion {n:2}: PASS [{secs:6.1}s] {what}: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("criterion {n:2}: FAIL [{secs:6.1}s] {what}: {detail}");
            }
        }
    }
    println!();
    if failed == 0 {
        println!("acceptance: all 12 criteria pass");
    } else {
        println!(
            "acceptance: {failed} of 12 criteria fail; the failing assertions quote \
             recorded tables that are internally inconsistent (see README data notes)"
        );
        std::process::exit(1);
    }
}
