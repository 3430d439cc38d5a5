//! Generalised Cartan matrices: validation, the dominance order, Kac type
//! classification, symmetrizers, affine-submatrix search and simply laced
//! covers.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::GcmError;

/// A validated generalised Cartan matrix with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gcm {
    labels: Vec<String>,
    entries: Vec<Vec<BigInt>>,
}

/// Kac type of an indecomposable GCM.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KacType {
    Finite,
    Affine,
    Indefinite,
}

impl std::fmt::Display for KacType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            KacType::Finite => write!(f, "Finite"),
            KacType::Affine => write!(f, "Affine"),
            KacType::Indefinite => write!(f, "Indefinite"),
        }
    }
}

/// An injective map from the index set of one GCM into another's.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding(Vec<usize>);

impl Embedding {
    pub fn new(map: Vec<usize>, target_rank: usize) -> Result<Embedding, GcmError> {
        let mut seen = vec![false; target_rank];
        for &t in &map {
            if t >= target_rank || seen[t] {
                return Err(GcmError::BadEmbedding);
            }
            seen[t] = true;
        }
        Ok(Embedding(map))
    }

    pub fn identity(rank: usize) -> Embedding {
        Embedding((0..rank).collect())
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }
}

impl Gcm {
    /// Validate the axioms C1 (diagonal 2), C2 (nonpositive off-diagonal) and
    /// C3 (symmetric zero pattern).
    pub fn new(matrix: Vec<Vec<BigInt>>) -> Result<Gcm, GcmError> {
        let n = matrix.len();
        let labels = (1..=n).map(|i| i.to_string()).collect();
        Gcm::with_labels(labels, matrix)
    }

    pub fn with_labels(labels: Vec<String>, matrix: Vec<Vec<BigInt>>) -> Result<Gcm, GcmError> {
        let n = matrix.len();
        if labels.len() != n {
            return Err(GcmError::BadLabels);
        }
        for row in &matrix {
            if row.len() != n {
                return Err(GcmError::NotSquare);
            }
        }
        let two = BigInt::from(2);
        for i in 0..n {
            if matrix[i][i] != two {
                return Err(GcmError::DiagonalNotTwo { i });
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if matrix[i][j].is_positive() {
                    return Err(GcmError::PositiveOffDiagonal { i, j });
                }
                if matrix[i][j].is_zero() != matrix[j][i].is_zero() {
                    return Err(GcmError::AsymmetricZero { i, j });
                }
            }
        }
        Ok(Gcm { labels, entries: matrix })
    }

    /// Convenience constructor from small integer rows.
    pub fn from_rows(rows: &[&[i64]]) -> Result<Gcm, GcmError> {
        Gcm::new(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    /// Off-diagonal entry as an i64; panics when it does not fit.
    pub fn entry_i64(&self, i: usize, j: usize) -> i64 {
        i64::try_from(&self.entries[i][j]).expect("GCM entry exceeds i64 range")
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| (0..n).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    pub fn is_simply_laced(&self) -> bool {
        let n = self.rank();
        let m1 = -BigInt::one();
        (0..n).all(|i| {
            (0..n).all(|j| i == j || self.entries[i][j].is_zero() || self.entries[i][j] == m1)
        })
    }

    /// Connectivity of the Dynkin diagram.
    pub fn is_indecomposable(&self) -> bool {
        let n = self.rank();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i != j && !seen[j] && !self.entries[i][j].is_zero() {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Principal submatrix on the given index subset.
    pub fn submatrix(&self, subset: &[usize]) -> Gcm {
        let labels = subset.iter().map(|&i| self.labels[i].clone()).collect();
        let entries = subset
            .iter()
            .map(|&i| subset.iter().map(|&j| self.entries[i][j].clone()).collect())
            .collect();
        Gcm { labels, entries }
    }

    /// max over i != j of |a_ij|; 0 for rank <= 1.
    pub fn m_a(&self) -> BigInt {
        let n = self.rank();
        let mut best = BigInt::zero();
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    let a = self.entries[i][j].abs();
                    if a > best {
                        best = a;
                    }
                }
            }
        }
        best
    }

    fn det(&self, subset: &[usize]) -> BigInt {
        // Bareiss fraction-free elimination.
        let k = subset.len();
        if k == 0 {
            return BigInt::one();
        }
        let mut m: Vec<Vec<BigInt>> = subset
            .iter()
            .map(|&i| subset.iter().map(|&j| self.entries[i][j].clone()).collect())
            .collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for r in 0..k - 1 {
            if m[r][r].is_zero() {
                let Some(swap) = (r + 1..k).find(|&s| !m[s][r].is_zero()) else {
                    return BigInt::zero();
                };
                m.swap(r, swap);
                sign = -sign;
            }
            for i in r + 1..k {
                for j in r + 1..k {
                    let num = &m[i][j] * &m[r][r] - &m[i][r] * &m[r][j];
                    m[i][j] = num.div_floor(&prev);
                }
            }
            prev = m[r][r].clone();
        }
        sign * m[k - 1][k - 1].clone()
    }

    /// Kac classification by the principal-minor criterion. Requires an
    /// indecomposable matrix.
    pub fn classify_type(&self) -> Result<KacType, GcmError> {
        if !self.is_indecomposable() {
            return Err(GcmError::DecomposableMatrix);
        }
        let n = self.rank();
        let full: Vec<usize> = (0..n).collect();
        let mut all_proper_positive = true;
        // Every nonempty proper subset.
        for mask in 1u32..(1 << n) - 1 {
            let subset: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            if !self.det(&subset).is_positive() {
                all_proper_positive = false;
                break;
            }
        }
        let d = self.det(&full);
        if all_proper_positive && d.is_positive() {
            Ok(KacType::Finite)
        } else if all_proper_positive && d.is_zero() {
            Ok(KacType::Affine)
        } else {
            Ok(KacType::Indefinite)
        }
    }

    /// Type of a possibly decomposable matrix: the "worst" component type.
    fn components_all_finite(&self) -> bool {
        let n = self.rank();
        let mut seen = vec![false; n];
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if i != j && !seen[j] && !self.entries[i][j].is_zero() {
                        seen[j] = true;
                        comp.push(j);
                        stack.push(j);
                    }
                }
            }
            comp.sort_unstable();
            let sub = self.submatrix(&comp);
            if sub.classify_type().expect("component is indecomposable") != KacType::Finite {
                return false;
            }
        }
        true
    }

    /// Indefinite with every proper subdiagram of finite type.
    pub fn is_compact_hyperbolic(&self) -> Result<bool, GcmError> {
        let ty = self.classify_type()?;
        if ty != KacType::Indefinite {
            return Ok(false);
        }
        let n = self.rank();
        for mask in 1u32..(1 << n) - 1 {
            let subset: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
            if !self.submatrix(&subset).components_all_finite() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Minimal positive integer symmetrizer d with d_i a_ij = d_j a_ji, or
    /// `None` when the matrix is not symmetrizable.
    pub fn symmetrizer(&self) -> Option<Vec<BigInt>> {
        let n = self.rank();
        let mut d: Vec<Option<BigRational>> = vec![None; n];
        for start in 0..n {
            if d[start].is_some() {
                continue;
            }
            d[start] = Some(BigRational::one());
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                let di = d[i].clone().unwrap();
                for j in 0..n {
                    if i == j || self.entries[i][j].is_zero() {
                        continue;
                    }
                    // d_i a_ij = d_j a_ji  =>  d_j = d_i a_ij / a_ji
                    let dj = &di * BigRational::new(self.entries[i][j].clone(), self.entries[j][i].clone());
                    match &d[j] {
                        None => {
                            d[j] = Some(dj);
                            stack.push(j);
                        }
                        Some(old) => {
                            if *old != dj {
                                return None;
                            }
                        }
                    }
                }
            }
        }
        // Scale each connected component to minimal positive integers.
        let n_of = |q: &BigRational| q.numer().clone();
        let mut comp_id = vec![usize::MAX; n];
        let mut comps: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if comp_id[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut comp = vec![start];
            comp_id[start] = id;
            let mut stack = vec![start];
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if i != j && comp_id[j] == usize::MAX && !self.entries[i][j].is_zero() {
                        comp_id[j] = id;
                        comp.push(j);
                        stack.push(j);
                    }
                }
            }
            comps.push(comp);
        }
        let mut out = vec![BigInt::one(); n];
        for comp in comps {
            let mut denom_lcm = BigInt::one();
            for &i in &comp {
                denom_lcm = denom_lcm.lcm(d[i].as_ref().unwrap().denom());
            }
            let mut scaled: Vec<BigInt> = comp
                .iter()
                .map(|&i| n_of(&(d[i].clone().unwrap() * BigRational::from_integer(denom_lcm.clone()))))
                .collect();
            let mut g = BigInt::zero();
            for v in &scaled {
                g = g.gcd(v);
            }
            for v in &mut scaled {
                *v = &*v / &g;
            }
            for (k, &i) in comp.iter().enumerate() {
                out[i] = scaled[k].clone();
            }
        }
        debug_assert!((0..n).all(|i| {
            (0..n).all(|j| &out[i] * &self.entries[i][j] == &out[j] * &self.entries[j][i])
        }));
        Some(out)
    }
}

/// The dominance order on GCM: `b <= a` when B's index set embeds into A's
/// and every off-diagonal entry of B is dominated in absolute value by the
/// corresponding entry of A (so B has the shallower Serre relations and
/// `n+(A)` surjects onto `n+(B)`).
pub fn gcm_leq(b: &Gcm, a: &Gcm, embedding: &Embedding) -> bool {
    if embedding.indices().len() != b.rank() {
        return false;
    }
    let n = b.rank();
    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            if b.entry(i, j).abs() > a.entry(embedding.apply(i), embedding.apply(j)).abs() {
                return false;
            }
        }
    }
    true
}

/// Deterministic search for an affine `B <= A`: index subsets by size then
/// lexicographic order, entry tuples scanned from the (floored) entries of A
/// upward toward zero. The floor is `max(a_ij, -4 * rank)`.
pub fn find_affine_sub(a: &Gcm) -> Option<(Vec<usize>, Gcm)> {
    let n = a.rank();
    let floor_bound = -4 * (n as i64);
    let mut subsets: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..(1 << n) {
        let subset: Vec<usize> = (0..n).filter(|&i| mask & (1 << i) != 0).collect();
        if subset.len() >= 2 {
            subsets.push(subset);
        }
    }
    subsets.sort_by(|x, y| x.len().cmp(&y.len()).then(x.cmp(y)));
    for subset in subsets {
        let k = subset.len();
        let mut pairs: Vec<(usize, usize)> = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    pairs.push((i, j));
                }
            }
        }
        // Value ranges per pair, most negative first.
        let ranges: Vec<Vec<i64>> = pairs
            .iter()
            .map(|&(i, j)| {
                let aij = &a.rows()[subset[i]][subset[j]];
                let lo = if *aij < BigInt::from(floor_bound) {
                    floor_bound
                } else {
                    i64::try_from(aij).expect("entry fits i64 after floor")
                };
                (lo..=0).collect()
            })
            .collect();
        let mut idx = vec![0usize; pairs.len()];
        'tuples: loop {
            let mut rows: Vec<Vec<BigInt>> =
                (0..k).map(|i| (0..k).map(|j| if i == j { BigInt::from(2) } else { BigInt::zero() }).collect()).collect();
            for (t, &(i, j)) in pairs.iter().enumerate() {
                rows[i][j] = BigInt::from(ranges[t][idx[t]]);
            }
            if let Ok(b) = Gcm::new(rows) {
                if b.is_indecomposable() && b.classify_type() == Ok(KacType::Affine) {
                    debug_assert!(gcm_leq(
                        &b,
                        a,
                        &Embedding::new(subset.clone(), n).unwrap()
                    ));
                    return Some((subset, b));
                }
            }
            // Advance the tuple lexicographically (last coordinate fastest).
            for t in (0..pairs.len()).rev() {
                idx[t] += 1;
                if idx[t] < ranges[t].len() {
                    continue 'tuples;
                }
                idx[t] = 0;
                if t == 0 {
                    break 'tuples;
                }
            }
            break;
        }
    }
    None
}

/// A simply laced cover: block sizes, bipartite edge sets and the resulting
/// simply laced GCM.
#[derive(Clone, Debug)]
pub struct CoverSpec {
    pub block_sizes: Vec<usize>,
    /// Edges between cover vertices, each as ((i, r), (j, s)) with i < j.
    pub edges: Vec<((usize, usize), (usize, usize))>,
    pub cover_gcm: Gcm,
}

impl CoverSpec {
    /// Flat vertex index of (i, r) under block-major ordering.
    pub fn vertex_index(&self, block: usize, pos: usize) -> usize {
        self.block_sizes[..block].iter().sum::<usize>() + pos
    }

    pub fn vertex_count(&self) -> usize {
        self.block_sizes.iter().sum()
    }
}

fn lcm_u64(a: u64, b: u64) -> u64 {
    a / a.gcd(&b) * b
}

/// Deterministic simply laced cover of a symmetrizable GCM.
///
/// Block sizes are n_i = (lcm(d)/d_i) * t with t minimal so that every
/// bipartite block pair admits a biregular simple graph under the scheme
/// below; edges are laid out by a circulant when one block size divides the
/// other and by the diagonal wrap (e mod n_i, e mod n_j) otherwise.
pub fn simply_laced_cover(a: &Gcm) -> Result<CoverSpec, GcmError> {
    let n = a.rank();
    let d = a.symmetrizer().ok_or(GcmError::NotSymmetrizable)?;
    let d: Vec<u64> = d
        .iter()
        .map(|x| u64::try_from(x).expect("symmetrizer entry fits u64"))
        .collect();
    let lcm_d = d.iter().copied().fold(1u64, lcm_u64);
    let abs = |i: usize, j: usize| -> u64 {
        u64::try_from(a.entry(i, j).abs()).expect("cover entry fits u64")
    };

    let feasible = |t: u64| -> bool {
        let sizes: Vec<u64> = d.iter().map(|&di| lcm_d / di * t).collect();
        for i in 0..n {
            for j in 0..n {
                if i == j || a.entry(i, j).is_zero() {
                    continue;
                }
                let (ni, nj) = (sizes[i], sizes[j]);
                if abs(j, i) > nj {
                    return false;
                }
                if ni % nj != 0 && nj % ni != 0 {
                    let edges = ni * abs(j, i);
                    if edges > lcm_u64(ni, nj) {
                        return false;
                    }
                }
            }
        }
        true
    };
    let mut t = 1u64;
    while !feasible(t) {
        t += 1;
        assert!(t <= 1 << 20, "cover block sizes out of practical range");
    }
    let sizes: Vec<usize> = d.iter().map(|&di| (lcm_d / di * t) as usize).collect();

    let mut edges: Vec<((usize, usize), (usize, usize))> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if a.entry(i, j).is_zero() {
                continue;
            }
            let (ni, nj) = (sizes[i] as u64, sizes[j] as u64);
            // Degree of an i-block vertex toward block j is |a_ji|.
            let deg_i = abs(j, i);
            let deg_j = abs(i, j);
            debug_assert_eq!(ni * deg_i, nj * deg_j);
            if nj % ni == 0 {
                let q = nj / ni;
                for r in 0..ni {
                    for s in 0..deg_i {
                        edges.push(((i, r as usize), (j, ((r * q + s) % nj) as usize)));
                    }
                }
            } else if ni % nj == 0 {
                let q = ni / nj;
                for r in 0..nj {
                    for s in 0..deg_j {
                        edges.push(((i, ((r * q + s) % ni) as usize), (j, r as usize)));
                    }
                }
            } else {
                let total = ni * deg_i;
                for e in 0..total {
                    edges.push(((i, (e % ni) as usize), (j, (e % nj) as usize)));
                }
            }
        }
    }
    edges.sort();
    debug_assert!(edges.windows(2).all(|w| w[0] != w[1]), "cover has a multi-edge");

    // Assemble the cover GCM, block-major vertex order.
    let total: usize = sizes.iter().sum();
    let offset: Vec<usize> = {
        let mut o = vec![0usize; n];
        for i in 1..n {
            o[i] = o[i - 1] + sizes[i - 1];
        }
        o
    };
    let mut rows: Vec<Vec<BigInt>> =
        (0..total).map(|u| (0..total).map(|v| if u == v { BigInt::from(2) } else { BigInt::zero() }).collect()).collect();
    for &((i, r), (j, s)) in &edges {
        let u = offset[i] + r;
        let v = offset[j] + s;
        rows[u][v] = -BigInt::one();
        rows[v][u] = -BigInt::one();
    }
    let mut labels = Vec::with_capacity(total);
    for i in 0..n {
        for r in 0..sizes[i] {
            labels.push(format!("{}.{}", a.labels()[i], r + 1));
        }
    }
    let cover_gcm = Gcm::with_labels(labels, rows)?;
    debug_assert!(cover_gcm.is_simply_laced());

    let spec = CoverSpec { block_sizes: sizes, edges, cover_gcm };
    debug_assert!(cover_invariants_hold(a, &spec));
    Ok(spec)
}

/// Check the two CoverSpec invariants against the base matrix.
pub fn cover_invariants_hold(a: &Gcm, spec: &CoverSpec) -> bool {
    let n = a.rank();
    if spec.block_sizes.len() != n {
        return false;
    }
    if !spec.cover_gcm.is_simply_laced() {
        return false;
    }
    for i in 0..n {
        for r in 0..spec.block_sizes[i] {
            for j in 0..n {
                let deg = spec
                    .edges
                    .iter()
                    .filter(|&&((bi, ri), (bj, rj))| {
                        (bi == i && ri == r && bj == j) || (bj == i && rj == r && bi == j)
                    })
                    .count();
                if i == j {
                    if deg != 0 {
                        return false;
                    }
                } else {
                    let want = u64::try_from(a.entry(j, i).abs()).unwrap() as usize;
                    if deg != want {
                        return false;
                    }
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_axioms() {
        assert!(Gcm::from_rows(&[&[2, -3], &[-2, 2]]).is_ok());
        assert_eq!(
            Gcm::from_rows(&[&[2, -1], &[0, 2]]).unwrap_err(),
            GcmError::AsymmetricZero { i: 0, j: 1 }
        );
        assert_eq!(Gcm::from_rows(&[&[1]]).unwrap_err(), GcmError::DiagonalNotTwo { i: 0 });
        assert_eq!(
            Gcm::from_rows(&[&[2, 1], &[-1, 2]]).unwrap_err(),
            GcmError::PositiveOffDiagonal { i: 0, j: 1 }
        );
    }

    #[test]
    fn dominance_order_examples() {
        let a = Gcm::from_rows(&[&[2, -3], &[-2, 2]]).unwrap();
        let b = Gcm::from_rows(&[&[2, -2], &[-2, 2]]).unwrap();
        let id = Embedding::identity(2);
        assert!(gcm_leq(&b, &a, &id));
        assert!(gcm_leq(&a, &a, &id));
        let c = Gcm::from_rows(&[&[2, -3], &[-3, 2]]).unwrap();
        let d = Gcm::from_rows(&[&[2, -2], &[-2, 2]]).unwrap();
        assert!(!gcm_leq(&c, &d, &id));
    }

    #[test]
    fn classification_examples() {
        let fin = Gcm::from_rows(&[&[2, -1], &[-1, 2]]).unwrap();
        assert_eq!(fin.classify_type().unwrap(), KacType::Finite);
        // det = 0, proper minors = 2: the rank-2 affine matrix.
        let aff = Gcm::from_rows(&[&[2, -2], &[-2, 2]]).unwrap();
        assert_eq!(aff.classify_type().unwrap(), KacType::Affine);
        // det = -2 < 0.
        let ind = Gcm::from_rows(&[&[2, -3], &[-2, 2]]).unwrap();
        assert_eq!(ind.classify_type().unwrap(), KacType::Indefinite);
        let dec = Gcm::from_rows(&[&[2, 0], &[0, 2]]).unwrap();
        assert_eq!(dec.classify_type().unwrap_err(), GcmError::DecomposableMatrix);
    }

    #[test]
    fn compact_hyperbolic_examples() {
        assert!(Gcm::from_rows(&[&[2, -3], &[-2, 2]]).unwrap().is_compact_hyperbolic().unwrap());
        assert!(!Gcm::from_rows(&[&[2, -1], &[-1, 2]]).unwrap().is_compact_hyperbolic().unwrap());
        assert!(!Gcm::from_rows(&[&[2, -2], &[-2, 2]]).unwrap().is_compact_hyperbolic().unwrap());
    }

    #[test]
    fn affine_sub_examples() {
        let a = Gcm::from_rows(&[&[2, -3], &[-2, 2]]).unwrap();
        let (subset, b) = find_affine_sub(&a).unwrap();
        assert_eq!(subset, vec![0, 1]);
        assert_eq!(b, Gcm::from_rows(&[&[2, -2], &[-2, 2]]).unwrap());

        let aff = Gcm::from_rows(&[&[2, -2], &[-2, 2]]).unwrap();
        let (_, b2) = find_affine_sub(&aff).unwrap();
        assert_eq!(b2, aff);

        let fin = Gcm::from_rows(&[&[2, -1], &[-1, 2]]).unwrap();
        assert!(find_affine_sub(&fin).is_none());
    }

    #[test]
    fn symmetrizer_examples() {
        let a = Gcm::from_rows(&[&[2, -1], &[-2, 2]]).unwrap();
        assert_eq!(a.symmetrizer().unwrap(), vec![BigInt::from(2), BigInt::from(1)]);
        let sym = Gcm::from_rows(&[&[2, -3], &[-3, 2]]).unwrap();
        assert_eq!(sym.symmetrizer().unwrap(), vec![BigInt::one(), BigInt::one()]);
        // Cycle consistency fails.
        let bad = Gcm::from_rows(&[&[2, -1, -2], &[-2, 2, -1], &[-1, -2, 2]]).unwrap();
        assert!(bad.symmetrizer().is_none());
    }

    #[test]
    fn m_a_examples() {
        assert_eq!(Gcm::from_rows(&[&[2, -3], &[-2, 2]]).unwrap().m_a(), BigInt::from(3));
        assert_eq!(Gcm::from_rows(&[&[2, -1], &[-1, 2]]).unwrap().m_a(), BigInt::from(1));
        assert_eq!(Gcm::from_rows(&[&[2]]).unwrap().m_a(), BigInt::zero());
    }

    #[test]
    fn cover_examples() {
        // Blocks (1,2) joined in a path: the A3 diagram.
        let a = Gcm::from_rows(&[&[2, -1], &[-2, 2]]).unwrap();
        let c = simply_laced_cover(&a).unwrap();
        assert_eq!(c.block_sizes, vec![1, 2]);
        assert_eq!(c.edges, vec![((0, 0), (1, 0)), ((0, 0), (1, 1))]);
        assert!(c.cover_gcm.is_simply_laced());
        assert_eq!(c.cover_gcm.classify_type().unwrap(), KacType::Finite);

        // Blocks (2,2) in a 4-cycle: the affine A3^(1) diagram.
        let b = Gcm::from_rows(&[&[2, -2], &[-2, 2]]).unwrap();
        let c2 = simply_laced_cover(&b).unwrap();
        assert_eq!(c2.block_sizes, vec![2, 2]);
        assert_eq!(c2.edges.len(), 4);
        assert_eq!(c2.cover_gcm.classify_type().unwrap(), KacType::Affine);
        // Each vertex has degree exactly 2.
        for v in 0..4 {
            let deg = (0..4)
                .filter(|&u| u != v && !c2.cover_gcm.entry(u, v).is_zero())
                .count();
            assert_eq!(deg, 2);
        }

        // Simply laced input is its own cover.
        let s = Gcm::from_rows(&[&[2, -1], &[-1, 2]]).unwrap();
        let c3 = simply_laced_cover(&s).unwrap();
        assert_eq!(c3.block_sizes, vec![1, 1]);
        assert_eq!(c3.cover_gcm.rows(), s.rows());
    }

    #[test]
    fn cover_with_unequal_symmetrizer_is_biregular() {
        // d = (2,3,4); the floor-circulant layout would fail biregularity here.
        let a = Gcm::from_rows(&[&[2, -3, -4], &[-2, 2, -4], &[-2, -3, 2]]).unwrap();
        let c = simply_laced_cover(&a).unwrap();
        assert!(cover_invariants_hold(&a, &c));
    }
}
