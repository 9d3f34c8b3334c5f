//! The restricted bracket state sum, its multicurve decomposition, the
//! normalized Jones-type polynomial, and the closed-form coefficient
//! predictions from the reduced state graphs.
//!
//! For a diagram `D` with `c` crossings the state sum runs over all `2^c`
//! resolutions. States whose circles all bound disks contribute
//! `A^{a-b} (-A^2-A^{-2})^{|s|-1}` to `<D>_0`; every other state is filed
//! under the multicurve its non-disk circles form, and for those parts the
//! cleared product `(-A^2-A^{-2}) <D>_X` is recorded so that everything
//! stays inside `Z[A, A^{-1}]`.

mod homology;
mod laurent;

pub use laurent::LaurentPolynomial;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::kauffman_states::{
    self, fast::StateScanner, KauffmanState,
};
use crate::link_diagram::{LinkDiagram, Side};

/// Hard upper bound on the state-sum size; the i128 accumulators are exact
/// far beyond it.
pub const MAX_SUPPORTED_CROSSINGS: usize = 30;

/// Default crossing limit for state sums.
pub const DEFAULT_CROSSING_LIMIT: usize = 26;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SkeinError {
    #[error("diagram has {count} crossings, over the state-sum limit {limit}")]
    TooManyCrossings { count: usize, limit: usize },
    #[error("diagram is not geometrically {side}-adequate")]
    NotAdequate { side: Side },
}

/// `<D>_0` with its four tracked coefficients. The second coefficients are
/// read at degree gap 4 from the extremes and may be zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketZero {
    pub polynomial: LaurentPolynomial,
    pub a_m: BigInt,
    pub a_m1: BigInt,
    pub b_n1: BigInt,
    pub b_n: BigInt,
}

impl BracketZero {
    fn from_polynomial(polynomial: LaurentPolynomial) -> Self {
        let (a_m, a_m1, b_n1, b_n) = match (polynomial.max_degree(), polynomial.min_degree()) {
            (Some(hi), Some(lo)) => (
                polynomial.coefficient(hi),
                polynomial.coefficient(hi - 4),
                polynomial.coefficient(lo + 4),
                polynomial.coefficient(lo),
            ),
            _ => Default::default(),
        };
        BracketZero {
            polynomial,
            a_m,
            a_m1,
            b_n1,
            b_n,
        }
    }

    pub fn abs_coefficients(&self) -> (BigInt, BigInt, BigInt, BigInt) {
        (
            self.a_m.abs(),
            self.a_m1.abs(),
            self.b_n1.abs(),
            self.b_n.abs(),
        )
    }
}

/// Isotopy key of the multicurve left by a state's non-disk circles.
///
/// On the torus, disjoint essential circles are parallel, so the primitive
/// slope (up to sign) with a multiplicity is a complete invariant. On higher
/// genus the key is an explicitly flagged signature: it never conflates
/// multicurves with different homology or different complement pieces, but
/// distinct isotopy classes may share a signature.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum MulticurveKey {
    Torus {
        slope: (i64, i64),
        multiplicity: u32,
    },
    Signature {
        classes: Vec<Vec<i64>>,
        complement: Vec<(i64, u32)>,
    },
}

impl MulticurveKey {
    pub fn is_signature_only(&self) -> bool {
        matches!(self, MulticurveKey::Signature { .. })
    }
}

/// One multicurve part of the bracket: the cleared numerator
/// `(-A^2-A^{-2}) <D>_X`, which always lies in `Z[A, A^{-1}]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MulticurvePart {
    pub cleared: LaurentPolynomial,
    pub states: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BracketDecomposition {
    pub zero_part: BracketZero,
    pub zero_states: u64,
    pub parts: BTreeMap<MulticurveKey, MulticurvePart>,
}

/// The writhe-normalized polynomial `((-1)^w A^{-3w} <D>_0)|_{t=A^4}`,
/// stored over A; t-exponents are exact quarters of the A-exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JonesJ0 {
    pub polynomial_in_a: LaurentPolynomial,
    pub writhe: i64,
}

impl JonesJ0 {
    /// Highest t-degree as an exact quarter (numerator over 4).
    pub fn max_degree_quarters(&self) -> Option<i64> {
        self.polynomial_in_a.max_degree()
    }

    pub fn min_degree_quarters(&self) -> Option<i64> {
        self.polynomial_in_a.min_degree()
    }
}

/// Coefficient predictions valid under geometric adequacy.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoefficientFormulas {
    pub abs_a_m: u64,
    pub abs_a_m1: i64,
    pub abs_b_n: u64,
    pub abs_b_n1: i64,
}

fn check_limit(d: &LinkDiagram, limit: usize) -> Result<(), SkeinError> {
    let count = d.crossing_count();
    let limit = limit.min(MAX_SUPPORTED_CROSSINGS);
    if count > limit {
        return Err(SkeinError::TooManyCrossings { count, limit });
    }
    Ok(())
}

/// Exponent-indexed exact accumulator for one shard of the state range.
struct Buckets {
    offset: i64,
    data: Vec<i128>,
}

impl Buckets {
    fn new(c: usize) -> Self {
        let span = 3 * c as i64 + 8;
        Buckets {
            offset: span,
            data: vec![0; (2 * span + 1) as usize],
        }
    }

    fn add(&mut self, exp: i64, val: i128) {
        self.data[(exp + self.offset) as usize] += val;
    }

    fn merge(mut self, other: Buckets) -> Buckets {
        for (a, b) in self.data.iter_mut().zip(other.data) {
            *a += b;
        }
        self
    }

    fn into_polynomial(self) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            self.data
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != 0)
                .map(|(i, &v)| (i as i64 - self.offset, BigInt::from(v))),
        )
    }
}

/// Signed binomial rows of `(-A^2 - A^{-2})^k` for k = 0..=n.
fn circle_power_rows(n: usize) -> Vec<Vec<i128>> {
    let mut rows: Vec<Vec<i128>> = vec![vec![1]];
    for k in 1..=n {
        let prev = &rows[k - 1];
        let mut row = vec![0i128; k + 1];
        for i in 0..k {
            row[i] += prev[i];
            row[i + 1] += prev[i];
        }
        rows.push(row);
    }
    // sign (-1)^k folded in
    for (k, row) in rows.iter_mut().enumerate() {
        if k % 2 == 1 {
            for v in row.iter_mut() {
                *v = -*v;
            }
        }
    }
    rows
}

/// Accumulates the contribution of one all-contractible state:
/// `A^{a-b} (-A^2-A^{-2})^{k-1}`, expanded exactly.
fn add_state_term(buckets: &mut Buckets, rows: &[Vec<i128>], a: i64, b: i64, k: u32, extra: u32) {
    // extra = 0 computes the usual power k-1; extra = 1 the cleared power k.
    let pw = (k - 1 + extra) as usize;
    let row = &rows[pw];
    let base = a - b + 2 * pw as i64;
    for (i, &cf) in row.iter().enumerate() {
        buckets.add(base - 4 * i as i64, cf);
    }
}

/// The part of the bracket coming from states whose circles all bound
/// disks.
pub fn bracket_zero(d: &LinkDiagram, limit: usize) -> Result<BracketZero, SkeinError> {
    check_limit(d, limit)?;
    let c = d.crossing_count();
    let rows = circle_power_rows(c + 2);
    let total: u64 = 1u64 << c;
    let shards = shard_ranges(total);
    let buckets = shards
        .into_par_iter()
        .map(|(from, to)| {
            let mut scanner = StateScanner::new(d);
            let mut buckets = Buckets::new(c);
            for bits in from..to {
                let scan = scanner.analyze(bits);
                if scan.non_contractible == 0 {
                    let b = bits.count_ones() as i64;
                    add_state_term(
                        &mut buckets,
                        &rows,
                        c as i64 - b,
                        b,
                        scan.circles,
                        0,
                    );
                }
            }
            buckets
        })
        .reduce(|| Buckets::new(c), Buckets::merge);
    Ok(BracketZero::from_polynomial(buckets.into_polynomial()))
}

fn shard_ranges(total: u64) -> Vec<(u64, u64)> {
    let n = 64u64.min(total);
    let step = total / n;
    (0..n)
        .map(|i| {
            let from = i * step;
            let to = if i == n - 1 { total } else { from + step };
            (from, to)
        })
        .collect()
}

/// Computes the multicurve key of the latest scanned state; `None` when all
/// circles are contractible.
fn multicurve_key(
    d: &LinkDiagram,
    scanner: &mut StateScanner,
    basis: &homology::HomologyBasis,
    bits: u64,
) -> Option<MulticurveKey> {
    let n = scanner.circle_count();
    let mut classes = Vec::new();
    let mut nt = Vec::new();
    for ci in 0..n {
        if !scanner.circle_contractible(ci) {
            let chain = scanner.circle_strands(ci, bits);
            classes.push(homology::normalize_class(basis.class_of(&chain)));
            nt.push(ci);
        }
    }
    if nt.is_empty() {
        return None;
    }
    if d.genus() == 1 {
        let slope = (classes[0][0], classes[0][1]);
        debug_assert!(
            classes.iter().all(|c| (c[0], c[1]) == slope),
            "disjoint essential torus circles are parallel"
        );
        debug_assert_eq!(homology::gcd_all(&classes[0]), 1, "simple circle class is primitive");
        Some(MulticurveKey::Torus {
            slope,
            multiplicity: nt.len() as u32,
        })
    } else {
        classes.sort();
        // Complement pieces: regions glued along contractible circles; each
        // piece reports its Euler characteristic and the number of
        // non-contractible boundary copies it receives.
        let nf = d.map().face_count();
        let mut parent: Vec<u32> = (0..nf as u32).collect();
        fn find(p: &mut [u32], x: u32) -> u32 {
            let mut r = x;
            while p[r as usize] != r {
                r = p[r as usize];
            }
            let mut c = x;
            while p[c as usize] != r {
                let nx = p[c as usize];
                p[c as usize] = r;
                c = nx;
            }
            r
        }
        for ci in 0..n {
            if scanner.circle_contractible(ci) {
                let (ra, rb) = scanner.circle_side_regions(ci);
                let (ra, rb) = (find(&mut parent, ra), find(&mut parent, rb));
                if ra != rb {
                    parent[rb as usize] = ra;
                }
            }
        }
        let mut chi: BTreeMap<u32, i64> = BTreeMap::new();
        let mut bnd: BTreeMap<u32, u32> = BTreeMap::new();
        let mut region_roots = Vec::new();
        for f in 0..nf as u32 {
            let rr = scanner.region_root(f);
            if rr == f {
                region_roots.push(f);
            }
        }
        for &r in &region_roots {
            let piece = find(&mut parent, r);
            *chi.entry(piece).or_insert(0) += scanner.region_chi_of_root(r);
            bnd.entry(piece).or_insert(0);
        }
        for &ci in &nt {
            let (ra, rb) = scanner.circle_side_regions(ci);
            *bnd.entry(find(&mut parent, ra)).or_insert(0) += 1;
            *bnd.entry(find(&mut parent, rb)).or_insert(0) += 1;
        }
        let mut complement: Vec<(i64, u32)> = chi
            .iter()
            .map(|(piece, &x)| (x, bnd[piece]))
            .collect();
        complement.sort();
        Some(MulticurveKey::Signature {
            classes,
            complement,
        })
    }
}

/// Groups all states by the multicurve their non-disk circles form, keeping
/// the zero part alongside.
pub fn bracket_decomposition(
    d: &LinkDiagram,
    limit: usize,
) -> Result<BracketDecomposition, SkeinError> {
    check_limit(d, limit)?;
    let c = d.crossing_count();
    let rows = circle_power_rows(c + 2);
    let basis = homology::HomologyBasis::new(d.map());
    let total: u64 = 1u64 << c;
    let shards = shard_ranges(total);

    struct Shard {
        zero: Buckets,
        zero_states: u64,
        parts: BTreeMap<MulticurveKey, (Buckets, u64)>,
    }

    let merged = shards
        .into_par_iter()
        .map(|(from, to)| {
            let mut scanner = StateScanner::new(d);
            let mut shard = Shard {
                zero: Buckets::new(c),
                zero_states: 0,
                parts: BTreeMap::new(),
            };
            for bits in from..to {
                let scan = scanner.analyze(bits);
                let b = bits.count_ones() as i64;
                let a = c as i64 - b;
                if scan.non_contractible == 0 {
                    add_state_term(&mut shard.zero, &rows, a, b, scan.circles, 0);
                    shard.zero_states += 1;
                } else {
                    let key = multicurve_key(d, &mut scanner, &basis, bits)
                        .expect("state has non-contractible circles");
                    let st = scan.circles - scan.non_contractible;
                    let entry = shard
                        .parts
                        .entry(key)
                        .or_insert_with(|| (Buckets::new(c), 0));
                    // cleared numerator: power |s_t| rather than |s_t| - 1
                    add_state_term(&mut entry.0, &rows, a, b, st + 1, 0);
                    entry.1 += 1;
                }
            }
            shard
        })
        .reduce(
            || Shard {
                zero: Buckets::new(c),
                zero_states: 0,
                parts: BTreeMap::new(),
            },
            |mut x, y| {
                x.zero = x.zero.merge(y.zero);
                x.zero_states += y.zero_states;
                for (k, (b, n)) in y.parts {
                    match x.parts.remove(&k) {
                        Some((xb, xn)) => {
                            x.parts.insert(k, (xb.merge(b), xn + n));
                        }
                        None => {
                            x.parts.insert(k, (b, n));
                        }
                    }
                }
                x
            },
        );

    let mut parts = BTreeMap::new();
    let mut counted = merged.zero_states;
    for (k, (b, n)) in merged.parts {
        counted += n;
        parts.insert(
            k,
            MulticurvePart {
                cleared: b.into_polynomial(),
                states: n,
            },
        );
    }
    assert_eq!(counted, total, "states partition into zero part and multicurve parts");
    Ok(BracketDecomposition {
        zero_part: BracketZero::from_polynomial(merged.zero.into_polynomial()),
        zero_states: merged.zero_states,
        parts,
    })
}

/// The writhe normalization of `<D>_0`.
pub fn jones_j0(d: &LinkDiagram, limit: usize) -> Result<JonesJ0, SkeinError> {
    let bracket = bracket_zero(d, limit)?;
    Ok(jones_from_bracket(d, &bracket))
}

pub fn jones_from_bracket(d: &LinkDiagram, bracket: &BracketZero) -> JonesJ0 {
    let w = d.writhe();
    let sign = if w % 2 == 0 { 1 } else { -1 };
    let polynomial_in_a = bracket.polynomial.shift(-3 * w, &BigInt::from(sign));
    JonesJ0 {
        polynomial_in_a,
        writhe: w,
    }
}

/// The predicted coefficient magnitudes from the reduced state graphs:
/// `|a_m| = 1`, `|a_{m-1}| = e'_A - |s_A| + 1`, and the B-side mirror
/// images. Requires geometric adequacy on both queried sides.
pub fn coefficient_formulas(d: &LinkDiagram) -> Result<CoefficientFormulas, SkeinError> {
    let side_value = |side: Side| -> Result<i64, SkeinError> {
        if !kauffman_states::is_geometrically_adequate(d, side) {
            return Err(SkeinError::NotAdequate { side });
        }
        let state = KauffmanState::uniform(side, d.crossing_count());
        let g = kauffman_states::state_graph(d, &state);
        let reduced = kauffman_states::reduce_state_graph(d, &state, &g)
            .expect("adequate state graph has no loops");
        Ok(reduced.reduced_edge_count() as i64 - g.vertex_count() as i64 + 1)
    };
    Ok(CoefficientFormulas {
        abs_a_m: 1,
        abs_a_m1: side_value(Side::A)?,
        abs_b_n: 1,
        abs_b_n1: side_value(Side::B)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link_diagram::fixtures::*;

    fn bz(text: &str) -> BracketZero {
        bracket_zero(&diagram(text), DEFAULT_CROSSING_LIMIT).unwrap()
    }

    #[test]
    fn curl_bracket_is_single_monomial() {
        let b = bz(CURL_PLUS);
        assert_eq!(b.polynomial.to_string(), "-A^3");
        let m = diagram(CURL_PLUS).mirror();
        let bm = bracket_zero(&m, 26).unwrap();
        assert_eq!(bm.polynomial.to_string(), "-A^-3");
    }

    #[test]
    fn curl_normalizes_to_one() {
        let d = diagram(CURL_PLUS);
        let j = jones_j0(&d, 26).unwrap();
        assert_eq!(j.polynomial_in_a, LaurentPolynomial::one());
        let jm = jones_j0(&d.mirror(), 26).unwrap();
        assert_eq!(jm.polynomial_in_a, LaurentPolynomial::one());
    }

    #[test]
    fn hopf_bracket_value() {
        let b = bz(HOPF_S2);
        assert_eq!(b.polynomial.to_string(), "-A^4 - A^-4");
    }

    #[test]
    fn trefoil_bracket_value() {
        let b = bz(TREFOIL_S2);
        assert_eq!(b.polynomial.to_string(), "-A^5 - A^-3 + A^-7");
        assert_eq!(b.a_m, BigInt::from(-1));
        assert_eq!(b.a_m1, BigInt::from(0)); // degree 1 coefficient
        assert_eq!(b.b_n, BigInt::from(1));
        assert_eq!(b.b_n1, BigInt::from(-1));
    }

    #[test]
    fn fig8_bracket_value() {
        let b = bz(FIG8_S2);
        assert_eq!(b.polynomial.to_string(), "A^8 - A^4 + 1 - A^-4 + A^-8");
    }

    #[test]
    fn trefoil_formulas_match_measured() {
        let d = diagram(TREFOIL_S2);
        let f = coefficient_formulas(&d).unwrap();
        assert_eq!(f.abs_a_m1, 0);
        assert_eq!(f.abs_b_n1, 1);
        let b = bz(TREFOIL_S2);
        let (am, am1, bn1, bn) = b.abs_coefficients();
        assert_eq!(am, BigInt::from(f.abs_a_m));
        assert_eq!(am1, BigInt::from(f.abs_a_m1));
        assert_eq!(bn1, BigInt::from(f.abs_b_n1));
        assert_eq!(bn, BigInt::from(f.abs_b_n));
    }

    #[test]
    fn mirror_inverts_bracket() {
        for text in [TREFOIL_S2, HOPF_S2, FIG8_S2, TORUS4, TORUS8] {
            let d = diagram(text);
            let b = bracket_zero(&d, 26).unwrap();
            let bm = bracket_zero(&d.mirror(), 26).unwrap();
            assert_eq!(bm.polynomial, b.polynomial.substitute_inverse(), "{text}");
        }
    }

    #[test]
    fn decomposition_partitions_states() {
        for text in [TREFOIL_S2, TORUS4, TORUS8] {
            let d = diagram(text);
            let c = d.crossing_count();
            let dec = bracket_decomposition(&d, 26).unwrap();
            let total: u64 = dec.zero_states + dec.parts.values().map(|p| p.states).sum::<u64>();
            assert_eq!(total, 1u64 << c, "{text}");
            assert_eq!(dec.zero_part.polynomial, bz(text).polynomial, "{text}");
        }
    }

    #[test]
    fn genus_zero_has_empty_decomposition() {
        let dec = bracket_decomposition(&diagram(TREFOIL_S2), 26).unwrap();
        assert!(dec.parts.is_empty());
        assert_eq!(dec.zero_states, 8);
    }

    #[test]
    fn torus4_nearest_states_do_not_contribute() {
        // Only the two uniform states among { s_A, neighbors of s_A, s_B,
        // neighbors of s_B } have all circles contractible.
        let d = diagram(TORUS4);
        let c = d.crossing_count();
        let mut scanner = StateScanner::new(&d);
        assert_eq!(scanner.analyze(0).non_contractible, 0);
        assert_eq!(scanner.analyze((1 << c) - 1).non_contractible, 0);
        for i in 0..c as u32 {
            assert!(scanner.analyze(1 << i).non_contractible > 0, "flip {i}");
            assert!(
                scanner.analyze(((1u64 << c) - 1) ^ (1 << i)).non_contractible > 0,
                "co-flip {i}"
            );
        }
    }

    #[test]
    fn adequate_top_degree_law() {
        // Top A-degree is c + 2|s_A| - 2 for geometrically A-adequate
        // diagrams.
        for text in [TREFOIL_S2, HOPF_S2, FIG8_S2, TORUS8] {
            let d = diagram(text);
            if !kauffman_states::is_geometrically_adequate(&d, Side::A) {
                continue;
            }
            let c = d.crossing_count() as i64;
            let sa = kauffman_states::apply_state(
                &d,
                &KauffmanState::all_a(d.crossing_count()),
            );
            let b = bracket_zero(&d, 26).unwrap();
            assert_eq!(
                b.polynomial.max_degree().unwrap(),
                c + 2 * sa.total() as i64 - 2,
                "{text}"
            );
        }
    }

    #[test]
    fn limit_guard() {
        let d = diagram(TREFOIL_S2);
        assert_eq!(
            bracket_zero(&d, 2).unwrap_err(),
            SkeinError::TooManyCrossings { count: 3, limit: 2 }
        );
    }
}
