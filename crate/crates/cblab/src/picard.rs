//! Divisor classes and curve classes on the moduli spaces in play.
//!
//! On the genus-zero space with `n` marked points, divisor classes are
//! written in boundary coordinates `delta_J` and paired against F-curves
//! (one-parameter families indexed by partitions of the marked points into
//! four blocks). For `n = 5` there is a standard basis of five
//! "nonadjacent" boundary classes. The small spaces of genus 2 and 3 carry
//! classes in (lambda, psi, delta) coordinates; genus-2 spaces satisfy the
//! relation `10 lambda = delta_irr + 2 delta_1`, which is applied when
//! classes are compared, not when they are stored, so reports show the
//! coordinates a caller supplied.

use crate::util::{rat_to_string, solve_exact};
use crate::{rat_int, Error, Rat, Result};
use num_traits::Zero;
use std::fmt;

/// An F-curve: a partition of the `n` marked points (0-based) into four
/// nonempty blocks, each sorted, blocks ordered by their minima.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FCurve {
    pub blocks: [Vec<usize>; 4],
}

impl fmt::Display for FCurve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let bs: Vec<String> = self
            .blocks
            .iter()
            .map(|b| {
                let pts: Vec<String> = b.iter().map(|i| (i + 1).to_string()).collect();
                format!("{{{}}}", pts.join(","))
            })
            .collect();
        write!(f, "F({})", bs.join("|"))
    }
}

/// All F-curves of the `n`-pointed genus-zero space, enumerated through
/// restricted-growth strings so the order is deterministic.
pub fn fcurves(n: usize) -> Vec<FCurve> {
    let mut out = Vec::new();
    if n < 4 {
        return out;
    }
    let mut labels = vec![0u8; n];
    fn rec(labels: &mut Vec<u8>, pos: usize, max_used: u8, out: &mut Vec<FCurve>) {
        let n = labels.len();
        if pos == n {
            if max_used == 3 {
                let mut blocks: [Vec<usize>; 4] = Default::default();
                for (i, &l) in labels.iter().enumerate() {
                    blocks[l as usize].push(i);
                }
                out.push(FCurve { blocks });
            }
            return;
        }
        let cap = (max_used + 1).min(3);
        for l in 0..=cap {
            labels[pos] = l;
            rec(labels, pos + 1, max_used.max(l), out);
        }
    }
    rec(&mut labels, 1, 0, &mut out);
    out
}

/// Intersection number `delta_J . F` on the genus-zero space: +1 when `J`
/// (or its complement) is the union of exactly two blocks, -1 when it is a
/// single block, 0 otherwise.
pub fn delta_pairing(subset: &[usize], n: usize, f: &FCurve) -> i64 {
    debug_assert!(subset.len() >= 2 && subset.len() <= n - 2);
    let mut block_of = vec![0usize; n];
    for (bi, b) in f.blocks.iter().enumerate() {
        for &i in b {
            block_of[i] = bi;
        }
    }
    let mut used = [false; 4];
    for &i in subset {
        used[block_of[i]] = true;
    }
    let covered: usize = (0..4).filter(|&b| used[b]).map(|b| f.blocks[b].len()).sum();
    if covered != subset.len() {
        return 0; // J is not a union of whole blocks
    }
    match used.iter().filter(|&&u| u).count() {
        1 | 3 => -1,
        2 => 1,
        _ => unreachable!("subset is proper, so it cannot cover all four blocks"),
    }
}

fn canonical_subset(subset: &[usize], n: usize) -> Result<Vec<usize>> {
    let mut j: Vec<usize> = subset.to_vec();
    j.sort_unstable();
    j.dedup();
    if j.len() != subset.len() || j.last().is_some_and(|&x| x >= n) {
        return Err(Error::InvalidStratum(format!(
            "bad boundary index set {subset:?} for n = {n}"
        )));
    }
    if j.len() < 2 || j.len() > n - 2 {
        return Err(Error::InvalidStratum(format!(
            "boundary subsets need 2 <= |J| <= n-2; got {subset:?}"
        )));
    }
    let comp: Vec<usize> = (0..n).filter(|i| !j.contains(i)).collect();
    Ok(if (j.len(), &j) <= (comp.len(), &comp) { j } else { comp })
}

/// A divisor class on the `n`-pointed genus-zero space, written in
/// boundary coordinates. Subsets are stored canonically (the smaller of
/// `J` and its complement, ties by lex order).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DivisorClassM0n {
    pub n: usize,
    coeffs: std::collections::BTreeMap<Vec<usize>, Rat>,
}

impl DivisorClassM0n {
    pub fn zero(n: usize) -> Self {
        DivisorClassM0n { n, coeffs: Default::default() }
    }

    pub fn boundary(n: usize, subset: &[usize]) -> Result<Self> {
        let mut c = Self::zero(n);
        c.add_boundary(subset, &rat_int(1))?;
        Ok(c)
    }

    pub fn add_boundary(&mut self, subset: &[usize], coeff: &Rat) -> Result<()> {
        let j = canonical_subset(subset, self.n)?;
        let e = self.coeffs.entry(j).or_insert_with(Rat::zero);
        *e += coeff;
        if e.is_zero() {
            let j = canonical_subset(subset, self.n)?;
            self.coeffs.remove(&j);
        }
        Ok(())
    }

    pub fn coeff(&self, subset: &[usize]) -> Result<Rat> {
        let j = canonical_subset(subset, self.n)?;
        Ok(self.coeffs.get(&j).cloned().unwrap_or_else(Rat::zero))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rat)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn scale(&mut self, c: &Rat) {
        if c.is_zero() {
            self.coeffs.clear();
            return;
        }
        for v in self.coeffs.values_mut() {
            *v *= c;
        }
    }

    pub fn add_class(&mut self, other: &Self) {
        debug_assert_eq!(self.n, other.n);
        for (j, c) in &other.coeffs {
            let e = self.coeffs.entry(j.clone()).or_insert_with(Rat::zero);
            *e += c;
        }
        self.coeffs.retain(|_, v| !v.is_zero());
    }

    pub fn pair_fcurve(&self, f: &FCurve) -> Rat {
        let mut acc = Rat::zero();
        for (j, c) in &self.coeffs {
            let p = delta_pairing(j, self.n, f);
            if p != 0 {
                acc += c * rat_int(p);
            }
        }
        acc
    }

    /// Coordinates in the nonadjacent basis for n = 5, solved exactly from
    /// the pairings with all ten F-curves.
    pub fn to_nonadjacent_basis_n5(&self) -> Result<Vec<Rat>> {
        if self.n != 5 {
            return Err(Error::InvalidSpec(format!(
                "nonadjacent basis needs n = 5, got n = {}",
                self.n
            )));
        }
        let pairings: Vec<Rat> = fcurves(5).iter().map(|f| self.pair_fcurve(f)).collect();
        basis5_coords_from_pairings(&pairings)
    }
}

impl fmt::Display for DivisorClassM0n {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in &self.coeffs {
            let pts: Vec<String> = j.iter().map(|i| (i + 1).to_string()).collect();
            if first {
                write!(f, "{}*d{{{}}}", rat_to_string(c), pts.join(","))?;
                first = false;
            } else {
                write!(f, " + {}*d{{{}}}", rat_to_string(c), pts.join(","))?;
            }
        }
        Ok(())
    }
}

/// The five nonadjacent boundary subsets for n = 5 (0-based):
/// {1,3}, {1,4}, {2,4}, {2,5}, {3,5} in 1-based labels.
pub fn nonadjacent_basis_n5() -> [Vec<usize>; 5] {
    [vec![0, 2], vec![0, 3], vec![1, 3], vec![1, 4], vec![2, 4]]
}

/// Recover nonadjacent-basis coordinates of an n = 5 divisor class from
/// its pairings with `fcurves(5)` (in that order), by an exact
/// overdetermined solve. Errors if the pairings are inconsistent.
pub fn basis5_coords_from_pairings(pairings: &[Rat]) -> Result<Vec<Rat>> {
    let fs = fcurves(5);
    if pairings.len() != fs.len() {
        return Err(Error::InvalidSpec(format!(
            "expected {} F-curve pairings, got {}",
            fs.len(),
            pairings.len()
        )));
    }
    let basis = nonadjacent_basis_n5();
    let mut a = Vec::with_capacity(fs.len());
    for f in &fs {
        a.push(
            basis
                .iter()
                .map(|j| rat_int(delta_pairing(j, 5, f)))
                .collect::<Vec<Rat>>(),
        );
    }
    solve_exact(&a, pairings)
}

/// The small moduli spaces with hand-rolled divisor coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SmallSpace {
    /// Genus 2, no marked points: (lambda, delta_irr, delta_1), subject to
    /// 10 lambda = delta_irr + 2 delta_1.
    M2,
    /// Genus 2, one marked point: (lambda, psi_1, delta_irr, delta_1),
    /// same relation pulled back.
    M21,
    /// Genus 3: (lambda, delta_irr, delta_1), no relation.
    M3,
}

impl SmallSpace {
    pub fn coord_names(&self) -> &'static [&'static str] {
        match self {
            SmallSpace::M2 => &["lambda", "delta_irr", "delta_1"],
            SmallSpace::M21 => &["lambda", "psi_1", "delta_irr", "delta_1"],
            SmallSpace::M3 => &["lambda", "delta_irr", "delta_1"],
        }
    }
}

/// A divisor class on one of the small spaces, stored in the raw
/// coordinates of [`SmallSpace::coord_names`]. Equality and the zero test
/// go through [`reduced`](Self::reduced), which eliminates lambda on the
/// genus-2 spaces.
#[derive(Clone, Debug)]
pub struct DivisorClassSmall {
    pub space: SmallSpace,
    pub coords: Vec<Rat>,
}

impl DivisorClassSmall {
    pub fn new(space: SmallSpace, coords: Vec<Rat>) -> Result<Self> {
        let want = space.coord_names().len();
        if coords.len() != want {
            return Err(Error::InvalidSpec(format!(
                "{space:?} classes have {want} coordinates, got {}",
                coords.len()
            )));
        }
        Ok(DivisorClassSmall { space, coords })
    }

    pub fn from_ints(space: SmallSpace, coords: &[i64]) -> Self {
        Self::new(space, coords.iter().map(|&c| crate::rat(c, 1)).collect()).unwrap()
    }

    pub fn zero(space: SmallSpace) -> Self {
        let n = space.coord_names().len();
        DivisorClassSmall { space, coords: vec![Rat::zero(); n] }
    }

    /// Coordinates with lambda eliminated through
    /// `lambda = delta_irr/10 + delta_1/5` on the genus-2 spaces:
    /// M2 -> (delta_irr, delta_1), M21 -> (psi_1, delta_irr, delta_1),
    /// M3 -> unchanged.
    pub fn reduced(&self) -> Vec<Rat> {
        match self.space {
            SmallSpace::M2 => {
                let lam = &self.coords[0];
                vec![
                    &self.coords[1] + lam * crate::rat(1, 10),
                    &self.coords[2] + lam * crate::rat(1, 5),
                ]
            }
            SmallSpace::M21 => {
                let lam = &self.coords[0];
                vec![
                    self.coords[1].clone(),
                    &self.coords[2] + lam * crate::rat(1, 10),
                    &self.coords[3] + lam * crate::rat(1, 5),
                ]
            }
            SmallSpace::M3 => self.coords.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.reduced().iter().all(|c| c.is_zero())
    }

    pub fn scale(&mut self, c: &Rat) {
        for v in &mut self.coords {
            *v *= c;
        }
    }

    pub fn add_class(&mut self, other: &Self) {
        assert_eq!(self.space, other.space, "mixed small spaces");
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a += b;
        }
    }

    pub fn sub_class(&mut self, other: &Self) {
        assert_eq!(self.space, other.space, "mixed small spaces");
        for (a, b) in self.coords.iter_mut().zip(&other.coords) {
            *a -= b;
        }
    }
}

impl PartialEq for DivisorClassSmall {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.reduced() == other.reduced()
    }
}
impl Eq for DivisorClassSmall {}

impl fmt::Display for DivisorClassSmall {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.space.coord_names();
        let mut first = true;
        for (c, name) in self.coords.iter().zip(names) {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{}*{}", rat_to_string(c), name)?;
                first = false;
            } else {
                write!(f, " + {}*{}", rat_to_string(c), name)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// The hyperelliptic class on the genus-3 space:
/// `H = 9 lambda - delta_irr - 3 delta_1`.
pub fn m3_hyperelliptic() -> DivisorClassSmall {
    DivisorClassSmall::from_ints(SmallSpace::M3, &[9, -1, -3])
}

/// Decompose an M3 class over {H, delta_1}; errors when the class is not
/// in that span.
pub fn m3_in_h_delta1_span(class: &DivisorClassSmall) -> Result<(Rat, Rat)> {
    assert_eq!(class.space, SmallSpace::M3);
    let h = m3_hyperelliptic();
    // coords: a*(9,-1,-3) + b*(0,0,1) = class
    let a = -class.coords[1].clone();
    let b = &class.coords[2] + &a * rat_int(3);
    let mut check = h;
    check.scale(&a);
    let mut d1 = DivisorClassSmall::from_ints(SmallSpace::M3, &[0, 0, 1]);
    d1.scale(&b);
    check.add_class(&d1);
    check.sub_class(class);
    if check.coords.iter().all(|c| c.is_zero()) {
        Ok((a, b))
    } else {
        Err(Error::Inconsistent(format!(
            "{class} is not in the span of the hyperelliptic class and delta_1"
        )))
    }
}
