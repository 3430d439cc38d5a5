//! Root-lattice arithmetic shared by the root-table and Lie algebra engines:
//! pairings, simple reflections and the canonical descent of a positive
//! degree vector.

use num_bigint::BigInt;

use crate::freelie::Degree;
use crate::gcm::Gcm;

/// <alpha, alpha_i^vee> = sum_j alpha_j a_ij.
pub fn pairing_with_simple_coroot(a: &Gcm, alpha: &Degree, i: usize) -> BigInt {
    let mut acc = BigInt::from(0);
    for (j, &c) in alpha.0.iter().enumerate() {
        if c != 0 {
            acc += a.entry(i, j) * BigInt::from(c);
        }
    }
    acc
}

/// Bilinear pairing <alpha, h> for h in coroot coordinates.
pub fn pairing(a: &Gcm, alpha: &Degree, h: &Degree) -> BigInt {
    let mut acc = BigInt::from(0);
    for (i, &hi) in h.0.iter().enumerate() {
        if hi != 0 {
            acc += pairing_with_simple_coroot(a, alpha, i) * BigInt::from(hi);
        }
    }
    acc
}

fn to_i64(x: &BigInt) -> i64 {
    i64::try_from(x).expect("root coefficient exceeds i64")
}

/// Simple reflection on the root lattice: s_i(alpha) = alpha - <alpha, alpha_i^vee> alpha_i.
pub fn reflect_root(a: &Gcm, i: usize, alpha: &Degree) -> Degree {
    let c = to_i64(&pairing_with_simple_coroot(a, alpha, i));
    let mut v = alpha.0.clone();
    v[i] -= c;
    Degree(v)
}

/// Simple reflection on the coroot lattice: s_i(alpha_j^vee) = alpha_j^vee - a_ji alpha_i^vee.
pub fn reflect_coroot(a: &Gcm, i: usize, h: &Degree) -> Degree {
    // <alpha_i, h> = sum_j h_j a_ji
    let mut c = BigInt::from(0);
    for (j, &hj) in h.0.iter().enumerate() {
        if hj != 0 {
            acc_add(&mut c, a.entry(j, i), hj);
        }
    }
    let mut v = h.0.clone();
    v[i] -= to_i64(&c);
    Degree(v)
}

fn acc_add(acc: &mut BigInt, e: &BigInt, m: i64) {
    *acc += e * BigInt::from(m);
}

/// Outcome of the canonical descent of a positive degree vector: repeatedly
/// apply the height-decreasing simple reflection with least index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Descent {
    /// Reached a simple root; the word lists the reflections in the order
    /// applied.
    Real { word: Vec<usize>, simple: usize },
    /// Stalled at a vector with connected support and nonpositive pairings.
    Imaginary,
    /// Left the positive cone or stalled with disconnected support; not the
    /// shape of a root.
    NotRootLike,
}

pub fn descend(a: &Gcm, alpha: &Degree) -> Descent {
    if !alpha.is_positive() {
        return Descent::NotRootLike;
    }
    let rank = a.rank();
    let mut cur = alpha.clone();
    let mut word = Vec::new();
    loop {
        if let Some(j) = simple_index(&cur) {
            return Descent::Real { word, simple: j };
        }
        let mut moved = false;
        for i in 0..rank {
            if pairing_with_simple_coroot(a, &cur, i) > BigInt::from(0) {
                cur = reflect_root(a, i, &cur);
                word.push(i);
                moved = true;
                break;
            }
        }
        if !moved {
            return if support_connected(a, &cur) {
                Descent::Imaginary
            } else {
                Descent::NotRootLike
            };
        }
        if !cur.is_positive() {
            return Descent::NotRootLike;
        }
    }
}

pub fn simple_index(alpha: &Degree) -> Option<usize> {
    let mut idx = None;
    for (i, &c) in alpha.0.iter().enumerate() {
        match c {
            0 => {}
            1 if idx.is_none() => idx = Some(i),
            _ => return None,
        }
    }
    idx
}

pub fn support_connected(a: &Gcm, alpha: &Degree) -> bool {
    let support: Vec<usize> =
        alpha.0.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, _)| i).collect();
    if support.is_empty() {
        return false;
    }
    let mut seen = vec![false; support.len()];
    seen[0] = true;
    let mut stack = vec![0usize];
    while let Some(si) = stack.pop() {
        for sj in 0..support.len() {
            if !seen[sj] && si != sj && a.entry(support[si], support[sj]) != &BigInt::from(0) {
                seen[sj] = true;
                stack.push(sj);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// Replay a descent word in reverse on the coroot lattice: the coroot of the
/// real root with the given canonical descent data.
pub fn coroot_from_descent(a: &Gcm, word: &[usize], simple: usize) -> Degree {
    let mut h = Degree::unit(simple, a.rank());
    for &i in word.iter().rev() {
        h = reflect_coroot(a, i, &h);
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn deg(v: &[i64]) -> Degree {
        Degree(v.to_vec())
    }

    #[test]
    fn reflection_examples() {
        // A = [[2,-m],[-n,2]] with (m,n) = (3,2): s1(alpha2) = alpha2 + 3 alpha1.
        let a = Gcm::from_rows(&[&[2, -3], &[-2, 2]]).unwrap();
        assert_eq!(reflect_root(&a, 0, &deg(&[0, 1])), deg(&[3, 1]));
        // s_i(alpha_i) = -alpha_i, involution.
        assert_eq!(reflect_root(&a, 0, &deg(&[1, 0])), deg(&[-1, 0]));
        let x = deg(&[2, 5]);
        assert_eq!(reflect_root(&a, 1, &reflect_root(&a, 1, &x)), x);
        // s2(alpha1^vee) = alpha1^vee + 3 alpha2^vee  (a_12 = -m = -3).
        assert_eq!(reflect_coroot(&a, 1, &deg(&[1, 0])), deg(&[1, 3]));
        assert_eq!(reflect_coroot(&a, 0, &deg(&[1, 0])), deg(&[-1, 0]));
    }

    #[test]
    fn pairing_examples() {
        // <s2 alpha1, alpha2^vee> = n for A = [[2,-m],[-n,2]].
        for (m, n) in [(3i64, 2i64), (4, 3), (2, 2)] {
            let a = Gcm::from_rows(&[&[2, -m], &[-n, 2]]).unwrap();
            let gamma = reflect_root(&a, 1, &deg(&[1, 0]));
            assert_eq!(gamma, deg(&[1, n]));
            assert_eq!(pairing_with_simple_coroot(&a, &gamma, 1), BigInt::from(n));
            // <s2 alpha1, (s1 alpha2)^vee> = n(3 - mn).
            let beta_vee = reflect_coroot(&a, 0, &deg(&[0, 1]));
            assert_eq!(pairing(&a, &gamma, &beta_vee), BigInt::from(n * (3 - m * n)));
        }
        let a = Gcm::from_rows(&[&[2, -1], &[-1, 2]]).unwrap();
        assert_eq!(pairing_with_simple_coroot(&a, &deg(&[1, 0]), 0), BigInt::from(2));
    }

    #[test]
    fn descent_examples() {
        // A = [[2,-3],[-2,2]]: alpha1+alpha2 imaginary, 3 alpha1 + alpha2 real via s1.
        let a = Gcm::from_rows(&[&[2, -3], &[-2, 2]]).unwrap();
        assert_eq!(descend(&a, &deg(&[1, 1])), Descent::Imaginary);
        assert_eq!(descend(&a, &deg(&[3, 1])), Descent::Real { word: vec![0], simple: 1 });
        // Non-root shapes.
        assert_eq!(descend(&a, &deg(&[2, 0])), Descent::NotRootLike);
        let b = Gcm::from_rows(&[&[2, 0], &[0, 2]]).unwrap();
        assert_eq!(descend(&b, &deg(&[1, 1])), Descent::NotRootLike);
        // Coroot replay: <alpha, coroot(alpha)> = 2.
        let alpha = deg(&[3, 1]);
        let h = coroot_from_descent(&a, &[0], 1);
        assert_eq!(pairing(&a, &alpha, &h), BigInt::from(2));
    }
}
