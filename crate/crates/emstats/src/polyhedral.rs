//! Half-open simplices, simplicial cones, fundamental parallelepipeds, and
//! integer-point transforms.
//!
//! The cube [0,r]^n is triangulated by the braid arrangement into half-open
//! simplices indexed by plain permutations, with facets removed exactly at
//! descent positions so the cover is disjoint. The signed cube [-1,1]^n is
//! likewise triangulated into half-open simplices indexed by signed
//! permutations. Cones over these simplices carry two descriptions:
//!
//! * a V-description (ordered integer ray generators, possibly scaled away
//!   from the minimal generators) that produces the rational generating
//!   function via fundamental-parallelepiped points, and
//! * the inducing simplex's H-description (an inequality system), which
//!   drives a brute-force lattice-point oracle sharing no code with the
//!   rational formula.
//!
//! Two shifting techniques convert closed-parallelepiped lattice points into
//! the half-open ones; they must agree, and their count must equal the
//! generator determinant.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

use crate::series::{ExponentVector, Polynomial, RationalExpr, TruncatedSeries, VarId};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("point has dimension {got}, expected {expected}")]
    BadDimension { got: usize, expected: usize },
    #[error("point lies outside the cube [0,{r}]^{n}")]
    OutsideCube { r: u32, n: usize },
    #[error("fundamental-parallelepiped enumeration needs a cone over a unimodular base with integer scalings")]
    UnsupportedConeShape,
    #[error("scaling factors must be positive")]
    ZeroScaling,
    #[error("scaling length {got} does not match {expected} generators")]
    ScalingLength { got: usize, expected: usize },
}

/// A half-open simplex of the braid-arrangement triangulation.
///
/// Unsigned (signs = None): points satisfy
/// 0 <= x_{p(n)} <= ... <= x_{p(1)} <= scale, with x_{p(j+1)} < x_{p(j)}
/// strict for j in `strict` (and x_{p(n)} > 0 if n in `strict`).
///
/// Signed (signs = Some(eps), scale = 1): points satisfy
/// 0 <= e_1 x_{p(1)} <= ... <= e_n x_{p(n)} <= 1, strict between positions j
/// and j+1 for j in `strict` (j = 0 makes the leftmost inequality strict).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfOpenSimplex {
    pub perm: Vec<usize>,
    pub strict: BTreeSet<usize>,
    pub scale: u32,
    pub signs: Option<Vec<i8>>,
}

impl HalfOpenSimplex {
    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// Exact-rational membership test for a point of the ambient cube (the
    /// cone at height x_0 = 1).
    pub fn contains(&self, x: &[BigRational]) -> Result<bool, PolyError> {
        let n = self.n();
        if x.len() != n {
            return Err(PolyError::BadDimension {
                got: x.len(),
                expected: n,
            });
        }
        Ok(self.contains_at_height(x, &BigRational::one()))
    }

    /// Membership in the cone over the simplex: is (x0, x) in the cone?
    pub fn contains_at_height(&self, x: &[BigRational], x0: &BigRational) -> bool {
        let n = self.n();
        // Chain values y_1 <= ... <= y_n between 0 and the upper bound.
        let (chain, upper): (Vec<BigRational>, BigRational) = match &self.signs {
            None => (
                // Reverse the unsigned chain x_{p(n)} <= ... <= x_{p(1)} so
                // both cases read as an ascending chain.
                (0..n).rev().map(|i| x[self.perm[i] - 1].clone()).collect(),
                BigRational::from(BigInt::from(self.scale)) * x0.clone(),
            ),
            Some(eps) => (
                (0..n)
                    .map(|i| {
                        let v = x[self.perm[i] - 1].clone();
                        if eps[i] == -1 {
                            -v
                        } else {
                            v
                        }
                    })
                    .collect(),
                x0.clone(),
            ),
        };
        // Map the strictness positions onto the ascending chain: for the
        // unsigned case, strict at j separates x_{p(j)} and x_{p(j+1)},
        // which sit at ascending indices n-j and n-j-1... i.e. the gap below
        // chain index n-j; strict at n means chain[0] > 0. For the signed
        // case, strict at j separates chain[j-1] and chain[j] with j = 0
        // meaning chain[0] > 0.
        let strict_gap = |gap: usize| -> bool {
            // gap g is the inequality chain[g-1] <= chain[g], with g = 0
            // meaning 0 <= chain[0] and g = n meaning chain[n-1] <= upper.
            match &self.signs {
                None => gap < n && self.strict.contains(&(n - gap)),
                Some(_) => gap < n && self.strict.contains(&gap),
            }
        };
        let zero = BigRational::zero();
        let mut prev = zero;
        for (g, y) in chain.iter().enumerate() {
            if strict_gap(g) {
                if *y <= prev {
                    return false;
                }
            } else if *y < prev {
                return false;
            }
            prev = y.clone();
        }
        prev <= upper
    }

    /// Integer membership in the cone at integer height.
    pub fn contains_lattice(&self, x: &[i64], x0: i64) -> bool {
        let xr: Vec<BigRational> = x.iter().map(|&v| BigRational::from(BigInt::from(v))).collect();
        self.contains_at_height(&xr, &BigRational::from(BigInt::from(x0)))
    }

    /// Human-readable inequality list, e.g. `0 < -x2 <= x3 < -x1 <= 1`.
    pub fn inequality_text(&self) -> String {
        let n = self.n();
        let mut parts = vec!["0".to_string()];
        let mut rels = Vec::new();
        match &self.signs {
            None => {
                for g in 0..=n {
                    if g < n {
                        let pos = n - g;
                        rels.push(if self.strict.contains(&pos) { "<" } else { "<=" });
                        parts.push(format!("x{}", self.perm[pos - 1]));
                    } else {
                        rels.push("<=");
                        parts.push(self.scale.to_string());
                    }
                }
            }
            Some(eps) => {
                for g in 0..=n {
                    if g < n {
                        rels.push(if self.strict.contains(&g) { "<" } else { "<=" });
                        parts.push(if eps[g] == -1 {
                            format!("-x{}", self.perm[g])
                        } else {
                            format!("x{}", self.perm[g])
                        });
                    } else {
                        rels.push("<=");
                        parts.push("1".to_string());
                    }
                }
            }
        }
        let mut out = parts[0].clone();
        for (rel, p) in rels.iter().zip(&parts[1..]) {
            out.push_str(&format!(" {rel} {p}"));
        }
        out
    }
}

/// The simplex Delta_pi of the triangulation of [0,r]^n, with strict facets
/// at the classical descents of pi.
pub fn simplex_for(perm: &[usize], r: u32) -> HalfOpenSimplex {
    HalfOpenSimplex {
        perm: perm.to_vec(),
        strict: crate::statistics::plain_descents(perm),
        scale: r,
        signs: None,
    }
}

/// Triangulate [0,r]^n into n! half-open simplices indexed by S_n, in
/// lexicographic order of the indexing permutation.
pub fn triangulate_cube(n: usize, r: u32) -> Vec<HalfOpenSimplex> {
    use itertools::Itertools;
    (1..=n)
        .permutations(n)
        .map(|p| simplex_for(&p, r))
        .collect()
}

/// Triangulate [-1,1]^n into 2^n n! half-open simplices indexed by B_n
/// (enumeration order of the group), strict facets at natural-order descents.
pub fn triangulate_signed_cube(n: usize) -> Vec<HalfOpenSimplex> {
    let spec = crate::colored_perm::GroupSpec::new(2, n).expect("valid spec");
    crate::colored_perm::enumerate_group(spec)
        .iter()
        .map(|g| {
            let strict = crate::statistics::descent_set(g, crate::statistics::OrderFlavor::Natural)
                .expect("natural order is valid for r = 2");
            HalfOpenSimplex {
                perm: g.plain_part(),
                strict,
                scale: 1,
                signs: Some(
                    g.window()
                        .iter()
                        .map(|&(_, c)| if c == 1 { -1 } else { 1 })
                        .collect(),
                ),
            }
        })
        .collect()
}

/// Locate the unique simplex of triangulate_cube(n, r) containing x: sort
/// coordinates descending, break ties by smaller index first.
pub fn locate(x: &[BigRational], n: usize, r: u32) -> Result<HalfOpenSimplex, PolyError> {
    if x.len() != n {
        return Err(PolyError::BadDimension {
            got: x.len(),
            expected: n,
        });
    }
    let upper = BigRational::from(BigInt::from(r));
    if x.iter().any(|v| v.is_negative() || *v > upper) {
        return Err(PolyError::OutsideCube { r, n });
    }
    let mut idx: Vec<usize> = (1..=n).collect();
    idx.sort_by(|&a, &b| x[b - 1].cmp(&x[a - 1]).then(a.cmp(&b)));
    Ok(simplex_for(&idx, r))
}

/// How fundamental-parallelepiped points are produced for a cone.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ConeShape {
    /// Minimal generators form a unimodular basis; the cone's chosen
    /// generators are positive integer multiples of them.
    ScaledUnimodular,
    /// Cone over a simplex of [0,r]^n: minimal generators e_0 and
    /// e_0 + r(e_{p(1)} + ... + e_{p(j)}), determinant r^n, no extra scaling.
    UniformDilate(u32),
}

/// Which shifting technique converts closed-parallelepiped points to the
/// half-open set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShiftMethod {
    /// Translate each boundary point individually by the scaled generators
    /// whose coefficient vanishes at a removed facet.
    ShiftOffBoundary,
    /// Translate every closed-parallelepiped point by the sum of the minimal
    /// generators opposite removed facets.
    ShiftWhole,
}

/// A half-open simplicial cone with ordered integer generators.
/// Coordinate 0 is the grading direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialCone {
    /// Minimal ray generators (columns), each of length `dim`.
    base: Vec<Vec<i64>>,
    /// Positive integer scalings; chosen generator j is scales[j] * base[j].
    scales: Vec<i64>,
    /// open[j] = true means the facet opposite generator j is removed.
    open: Vec<bool>,
    shape: ConeShape,
    /// The inducing simplex (H-description), when the cone came from one.
    simplex: Option<HalfOpenSimplex>,
    /// Per-coordinate signs for the monomial encoding of the signed cube
    /// (index c-1 for coordinate c); None means the standard encoding.
    coord_signs: Option<Vec<i8>>,
}

impl SimplicialCone {
    pub fn dim(&self) -> usize {
        self.base.first().map_or(0, Vec::len)
    }

    /// The cone's chosen (possibly scaled) generators.
    pub fn generators(&self) -> Vec<Vec<i64>> {
        self.base
            .iter()
            .zip(&self.scales)
            .map(|(v, &c)| v.iter().map(|&e| e * c).collect())
            .collect()
    }

    pub fn open_flags(&self) -> &[bool] {
        &self.open
    }

    pub fn simplex(&self) -> Option<&HalfOpenSimplex> {
        self.simplex.as_ref()
    }

    /// |det| of the chosen generator matrix = number of fundamental-
    /// parallelepiped lattice points.
    pub fn det_abs(&self) -> i128 {
        let gens = self.generators();
        let d = gens.len();
        assert_eq!(d, self.dim(), "generators must be square");
        // Fraction-free Gaussian elimination (Bareiss) over i128.
        let mut m: Vec<Vec<i128>> = (0..d)
            .map(|row| (0..d).map(|col| gens[col][row] as i128).collect())
            .collect();
        let mut sign: i128 = 1;
        let mut prev: i128 = 1;
        for k in 0..d {
            if m[k][k] == 0 {
                let swap = (k + 1..d).find(|&i| m[i][k] != 0);
                match swap {
                    Some(i) => {
                        m.swap(k, i);
                        sign = -sign;
                    }
                    None => return 0,
                }
            }
            for i in k + 1..d {
                for j in k + 1..d {
                    m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
                }
                m[i][k] = 0;
            }
            prev = m[k][k];
        }
        (sign * m[d - 1][d - 1]).abs()
    }

    /// Lattice points of the half-open fundamental parallelepiped, via the
    /// requested shifting technique. Sorted lexicographically.
    pub fn fpp_points(&self, method: ShiftMethod) -> Result<Vec<Vec<i64>>, PolyError> {
        let closed = self.closed_fpp_points()?;
        let mut out: Vec<Vec<i64>> = match method {
            ShiftMethod::ShiftOffBoundary => closed
                .into_iter()
                .map(|(mut p, zero_set)| {
                    for j in 0..self.base.len() {
                        if self.open[j] && zero_set.contains(&j) {
                            for (coord, &b) in p.iter_mut().zip(&self.base[j]) {
                                *coord += b * self.scales[j];
                            }
                        }
                    }
                    p
                })
                .collect(),
            ShiftMethod::ShiftWhole => {
                if self.shape != ConeShape::ScaledUnimodular {
                    // Translating the whole parallelepiped by minimal
                    // generators only reproduces the half-open point set when
                    // the minimal generators span the point lattice.
                    return Err(PolyError::UnsupportedConeShape);
                }
                closed
                    .into_iter()
                    .map(|(mut p, _)| {
                        for j in 0..self.base.len() {
                            if self.open[j] {
                                for (coord, &b) in p.iter_mut().zip(&self.base[j]) {
                                    *coord += b;
                                }
                            }
                        }
                        p
                    })
                    .collect()
            }
        };
        out.sort();
        Ok(out)
    }

    /// Closed-parallelepiped lattice points together with the set of
    /// generator indices whose coefficient is zero (boundary bookkeeping for
    /// shifting off the boundary).
    fn closed_fpp_points(&self) -> Result<Vec<(Vec<i64>, BTreeSet<usize>)>, PolyError> {
        let d = self.base.len();
        let dim = self.dim();
        let mut out = Vec::new();
        match self.shape {
            ConeShape::ScaledUnimodular => {
                // Points are sum alpha_j * base_j with 0 <= alpha_j < scale_j.
                let mut alpha = vec![0i64; d];
                loop {
                    let mut p = vec![0i64; dim];
                    let mut zero_set = BTreeSet::new();
                    for j in 0..d {
                        if alpha[j] == 0 {
                            zero_set.insert(j);
                        }
                        for (coord, &b) in p.iter_mut().zip(&self.base[j]) {
                            *coord += alpha[j] * b;
                        }
                    }
                    out.push((p, zero_set));
                    let mut pos = d;
                    while pos > 0 {
                        alpha[pos - 1] += 1;
                        if alpha[pos - 1] < self.scales[pos - 1] {
                            break;
                        }
                        alpha[pos - 1] = 0;
                        pos -= 1;
                    }
                    if pos == 0 {
                        break;
                    }
                }
            }
            ConeShape::UniformDilate(r) => {
                // base_j = e_0 + r * w_j with w unimodular in the last n
                // coordinates; lattice points are sum (a_j / r) base_j with
                // a_j in {0..r-1} and r | sum a_j, which pins a_0.
                let r = r as i64;
                let n = d - 1;
                let mut a = vec![0i64; n]; // coefficients a_1..a_n
                loop {
                    let s: i64 = a.iter().sum();
                    let a0 = (r - s % r) % r;
                    let mut p = vec![0i64; dim];
                    p[0] = (a0 + s) / r;
                    for j in 1..d {
                        for (coord, &b) in p.iter_mut().zip(&self.base[j]).skip(1) {
                            // The spatial part of base_j is r * w_j, so the
                            // coefficient a_j / r contributes a_j * w_j.
                            *coord += a[j - 1] * b / r;
                        }
                    }
                    let mut zero_set = BTreeSet::new();
                    if a0 == 0 {
                        zero_set.insert(0);
                    }
                    for j in 1..d {
                        if a[j - 1] == 0 {
                            zero_set.insert(j);
                        }
                    }
                    out.push((p, zero_set));
                    let mut pos = n;
                    while pos > 0 {
                        a[pos - 1] += 1;
                        if a[pos - 1] < r {
                            break;
                        }
                        a[pos - 1] = 0;
                        pos -= 1;
                    }
                    if pos == 0 {
                        break;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Monomial of a lattice point under the cone's encoding.
    pub fn encode_point(&self, p: &[i64]) -> ExponentVector {
        encode_lattice_point(p, self.coord_signs.as_deref())
    }

    /// The integer-point transform as numerator over product of
    /// (1 - generator monomial).
    pub fn sigma_rational(&self) -> RationalExpr {
        let method = match self.shape {
            ConeShape::ScaledUnimodular => ShiftMethod::ShiftWhole,
            ConeShape::UniformDilate(_) => ShiftMethod::ShiftOffBoundary,
        };
        let points = self
            .fpp_points(method)
            .expect("constructed cones support their default shifting method");
        let mut numerator = Polynomial::zero();
        for p in &points {
            numerator.add_term(self.encode_point(p), &BigInt::one());
        }
        let denominator = self
            .generators()
            .iter()
            .map(|g| encode_generator(g, self.coord_signs.as_deref()))
            .collect();
        RationalExpr::new(numerator, denominator)
    }
}

/// Monomial encoding of a lattice point. Coordinate 0 maps to z0; spatial
/// coordinate c maps to z_c^{m_c} when its sign is positive, and to
/// s * w_c^{-m_c} when negative (the w variables encode reciprocal negative
/// coordinates so exponents stay nonnegative).
fn encode_lattice_point(p: &[i64], coord_signs: Option<&[i8]>) -> ExponentVector {
    let mut pairs: Vec<(VarId, u32)> = Vec::new();
    if p[0] != 0 {
        pairs.push((VarId::Z(0), p[0] as u32));
    }
    for (c, &m) in p.iter().enumerate().skip(1) {
        let negative = match coord_signs {
            Some(signs) => signs[c - 1] == -1,
            None => false,
        };
        if negative {
            debug_assert!(m <= 0, "negative coordinates carry nonpositive values");
            pairs.push((VarId::S, 1));
            if m != 0 {
                pairs.push((VarId::W(c), (-m) as u32));
            }
        } else if m != 0 {
            debug_assert!(m >= 0);
            pairs.push((VarId::Z(c), m as u32));
        }
    }
    ExponentVector::from_pairs(pairs)
}

/// Generator monomials never carry the sign marker s.
fn encode_generator(g: &[i64], coord_signs: Option<&[i8]>) -> ExponentVector {
    let mut pairs: Vec<(VarId, u32)> = Vec::new();
    if g[0] != 0 {
        pairs.push((VarId::Z(0), g[0] as u32));
    }
    for (c, &m) in g.iter().enumerate().skip(1) {
        if m == 0 {
            continue;
        }
        let negative = coord_signs.map_or(false, |signs| signs[c - 1] == -1);
        if negative {
            pairs.push((VarId::W(c), (-m) as u32));
        } else {
            pairs.push((VarId::Z(c), m as u32));
        }
    }
    ExponentVector::from_pairs(pairs)
}

/// Cone over a half-open simplex. For an unsigned simplex with scale 1 the
/// minimal generators are e_0 and e_0 + e_{p(1)} + ... + e_{p(j)}; `scaling`
/// multiplies generator j by a positive integer. For an unsigned simplex
/// with scale r >= 2 (a cell of the [0,r]^n triangulation), the minimal
/// generators are e_0 and e_0 + r(e_{p(1)} + ... + e_{p(j)}) and the scaling
/// must be all ones. Signed simplices use the generators
/// e_0 + sum_{i > j} eps_i e_{p(i)} and scaling all ones.
pub fn cone_over(s: &HalfOpenSimplex, scaling: &[u32]) -> Result<SimplicialCone, PolyError> {
    let n = s.n();
    if scaling.len() != n + 1 {
        return Err(PolyError::ScalingLength {
            got: scaling.len(),
            expected: n + 1,
        });
    }
    if scaling.iter().any(|&c| c == 0) {
        return Err(PolyError::ZeroScaling);
    }
    let dim = n + 1;
    match &s.signs {
        None => {
            let step = s.scale as i64;
            // Generator j = e_0 + step * (e_{p(1)} + ... + e_{p(j)});
            // the facet opposite it is x_{p(j)} = x_{p(j+1)}, removed for
            // j in the strict set.
            let mut base = Vec::with_capacity(dim);
            let mut open = Vec::with_capacity(dim);
            for j in 0..=n {
                let mut v = vec![0i64; dim];
                v[0] = 1;
                for i in 0..j {
                    v[s.perm[i]] = step;
                }
                base.push(v);
                open.push(s.strict.contains(&j));
            }
            let shape = if s.scale == 1 {
                ConeShape::ScaledUnimodular
            } else {
                if scaling.iter().any(|&c| c != 1) {
                    return Err(PolyError::UnsupportedConeShape);
                }
                ConeShape::UniformDilate(s.scale)
            };
            Ok(SimplicialCone {
                base,
                scales: scaling.iter().map(|&c| c as i64).collect(),
                open,
                shape,
                simplex: Some(s.clone()),
                coord_signs: None,
            })
        }
        Some(eps) => {
            if scaling.iter().any(|&c| c != 1) {
                return Err(PolyError::UnsupportedConeShape);
            }
            // Generator j = e_0 + sum_{i=j+1..n} eps_i e_{p(i)}; the facet
            // opposite it separates chain positions j and j+1, removed for
            // j in the strict (natural-descent) set.
            let mut base = Vec::with_capacity(dim);
            let mut open = Vec::with_capacity(dim);
            for j in 0..=n {
                let mut v = vec![0i64; dim];
                v[0] = 1;
                for i in j..n {
                    v[s.perm[i]] = eps[i] as i64;
                }
                base.push(v);
                open.push(s.strict.contains(&j));
            }
            // Signs per coordinate c: the sign attached to the window
            // position carrying letter c.
            let mut coord_signs = vec![1i8; n];
            for (i, &p) in s.perm.iter().enumerate() {
                coord_signs[p - 1] = eps[i];
            }
            Ok(SimplicialCone {
                base,
                scales: vec![1; dim],
                open,
                shape: ConeShape::ScaledUnimodular,
                simplex: Some(s.clone()),
                coord_signs: Some(coord_signs),
            })
        }
    }
}

/// A free-standing cone for tests and the command line: explicit minimal
/// generators, scalings, and open flags (unimodular base).
pub fn cone_from_generators(
    base: Vec<Vec<i64>>,
    scaling: &[u32],
    open: Vec<bool>,
) -> Result<SimplicialCone, PolyError> {
    if scaling.len() != base.len() || open.len() != base.len() {
        return Err(PolyError::ScalingLength {
            got: scaling.len(),
            expected: base.len(),
        });
    }
    if scaling.iter().any(|&c| c == 0) {
        return Err(PolyError::ZeroScaling);
    }
    Ok(SimplicialCone {
        scales: scaling.iter().map(|&c| c as i64).collect(),
        open,
        shape: ConeShape::ScaledUnimodular,
        simplex: None,
        coord_signs: None,
        base,
    })
}

/// Regions whose lattice points the brute-force transform enumerates.
#[derive(Debug, Clone)]
pub enum Region {
    /// The cone over a half-open simplex (H-description membership).
    Simplex(HalfOpenSimplex),
    /// cone([0,r]^n): 0 <= x_i <= r * x_0.
    Cube { n: usize, r: u32 },
    /// cone([-1,1]^n): -x_0 <= x_i <= x_0, signed monomial encoding.
    SignedCube { n: usize },
}

/// Brute-force integer-point transform: sum one monomial per lattice point
/// with grading coordinate x_0 <= k, straight from the inequality system.
pub fn sigma_bruteforce(region: &Region, k: u32) -> TruncatedSeries {
    let mut total = Polynomial::zero();
    let one = BigInt::one();
    match region {
        Region::Simplex(s) => {
            let n = s.n();
            let signed = s.signs.is_some();
            for x0 in 0..=k as i64 {
                let bound = if signed { x0 } else { s.scale as i64 * x0 };
                let lo = if signed { -bound } else { 0 };
                for x in lattice_box(n, lo, bound) {
                    if s.contains_lattice(&x, x0) {
                        let mut p = vec![x0];
                        p.extend(&x);
                        let m = if signed {
                            encode_by_point_sign(&p)
                        } else {
                            encode_lattice_point(&p, None)
                        };
                        total.add_term(m, &one);
                    }
                }
            }
        }
        Region::Cube { n, r } => {
            for x0 in 0..=k as i64 {
                let bound = *r as i64 * x0;
                for x in lattice_box(*n, 0, bound) {
                    let mut p = vec![x0];
                    p.extend(&x);
                    total.add_term(encode_lattice_point(&p, None), &one);
                }
            }
        }
        Region::SignedCube { n } => {
            for x0 in 0..=k as i64 {
                for x in lattice_box(*n, -x0, x0) {
                    let mut p = vec![x0];
                    p.extend(&x);
                    total.add_term(encode_by_point_sign(&p), &one);
                }
            }
        }
    }
    TruncatedSeries::new(total, k)
}

/// Signed encoding driven by the point's own coordinate signs: strictly
/// negative coordinates contribute s * w^{-m}, others z^m. On the points of
/// any signed-simplex cone this matches the cone's sign encoding, because
/// sign-negative coordinates of such points are strictly negative.
fn encode_by_point_sign(p: &[i64]) -> ExponentVector {
    let signs: Vec<i8> = p[1..].iter().map(|&m| if m < 0 { -1 } else { 1 }).collect();
    encode_lattice_point(p, Some(&signs))
}

/// All integer vectors of length n with entries in [lo, hi].
fn lattice_box(n: usize, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut x = vec![lo; n];
    if lo > hi {
        return out;
    }
    loop {
        out.push(x.clone());
        let mut pos = n;
        while pos > 0 {
            x[pos - 1] += 1;
            if x[pos - 1] <= hi {
                break;
            }
            x[pos - 1] = lo;
            pos -= 1;
        }
        if pos == 0 {
            break;
        }
    }
    out
}

/// Convenience scalings for cones over unsigned unit-scale simplices.
pub fn scaling_all_one(n: usize) -> Vec<u32> {
    vec![1; n + 1]
}

/// e_0 unscaled, every other generator multiplied by r.
pub fn scaling_wreath(n: usize, r: u32) -> Vec<u32> {
    let mut s = vec![r; n + 1];
    s[0] = 1;
    s
}

/// e_0 and the full-sum generator unscaled, the middle ones doubled.
pub fn scaling_type_d(n: usize) -> Vec<u32> {
    let mut s = vec![2; n + 1];
    s[0] = 1;
    s[n] = 1;
    s
}
