//! Determinantal measures: the Cauchy–Binet (Andreief) identity and the
//! Fredholm form of Z_N(1 + g) / Z_N(1).

use crate::FredholmError;
use combinat_core::paths::determinant;
use num_traits::Num;

/// All N-tuples over `atoms` points, as index vectors.
fn tuples(n: usize, atoms: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = atoms.pow(n as u32);
    (0..total).map(move |mut c| {
        let mut t = vec![0; n];
        for slot in t.iter_mut() {
            *slot = c % atoms;
            c /= atoms;
        }
        t
    })
}

fn factorial<T: Num + Clone>(n: usize) -> T {
    let mut f = T::one();
    let mut k = T::one();
    for _ in 0..n {
        f = f * k.clone();
        k = k + T::one();
    }
    f
}

/// Z_N(f) = (1/N!) Σ_{t ∈ atoms^N} det(φ_i(t_j)) det(ψ_i(t_j)) ∏ w(t_k) f(t_k),
/// by direct N-fold summation.
fn partition_function<T: Num + Clone>(phi: &[Vec<T>], psi: &[Vec<T>], wf: &[T]) -> T {
    let n = phi.len();
    let mut z = T::zero();
    for t in tuples(n, wf.len()) {
        let weight = t.iter().fold(T::one(), |acc, &k| acc * wf[k].clone());
        if weight.is_zero() {
            continue;
        }
        let a: Vec<Vec<T>> = phi.iter().map(|f| t.iter().map(|&k| f[k].clone()).collect()).collect();
        let b: Vec<Vec<T>> = psi.iter().map(|f| t.iter().map(|&k| f[k].clone()).collect()).collect();
        z = z + determinant(a) * determinant(b) * weight;
    }
    z / factorial(n)
}

fn gram<T: Num + Clone>(phi: &[Vec<T>], psi: &[Vec<T>], w: &[T]) -> Vec<Vec<T>> {
    phi.iter()
        .map(|f| {
            psi.iter()
                .map(|g| (0..w.len()).fold(T::zero(), |acc, k| acc + f[k].clone() * g[k].clone() * w[k].clone()))
                .collect()
        })
        .collect()
}

/// (N-fold symmetrised sum, det(∫ φ_i ψ_j dμ)) for the discrete measure w.
pub fn cauchy_binet_sides<T: Num + Clone>(phi: &[Vec<T>], psi: &[Vec<T>], w: &[T]) -> (T, T) {
    (partition_function(phi, psi, w), determinant(gram(phi, psi, w)))
}

fn inverse<T: Num + Clone>(g: &[Vec<T>]) -> Result<Vec<Vec<T>>, FredholmError> {
    let n = g.len();
    let d = determinant(g.to_vec());
    if d.is_zero() {
        return Err(FredholmError::Singular);
    }
    let minor = |r: usize, c: usize| -> Vec<Vec<T>> {
        g.iter()
            .enumerate()
            .filter(|(i, _)| *i != r)
            .map(|(_, row)| row.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, v)| v.clone()).collect())
            .collect()
    };
    Ok((0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = determinant(minor(j, i));
                    let c = if (i + j) % 2 == 0 { c } else { T::zero() - c };
                    c / d.clone()
                })
                .collect()
        })
        .collect())
}

/// |Z_N(1+g)/Z_N(1) − det(I + gK)| for K(x, y) = Σ ψ_i(x)(G⁻¹)_{ij} φ_j(y),
/// G_{ij} = ∫ φ_i ψ_j dμ, on the discrete measure with masses `w`.
/// Returns (ratio of partition functions, Fredholm determinant).
pub fn biorthogonal_fredholm_check<T: Num + Clone>(
    phi: &[Vec<T>],
    psi: &[Vec<T>],
    w: &[T],
    g: &[T],
) -> Result<(T, T), FredholmError> {
    let n = phi.len();
    if n == 0 || psi.len() != n || n > 4 {
        return Err(FredholmError::Parameter(format!("need 1 ≤ N ≤ 4 functions on each side, got {n}")));
    }
    let ginv = inverse(&gram(phi, psi, w))?;
    let wf: Vec<T> = w.iter().zip(g).map(|(w, g)| w.clone() * (T::one() + g.clone())).collect();
    let ratio = partition_function(phi, psi, &wf) / partition_function(phi, psi, w);
    let atoms = w.len();
    let kernel = |x: usize, y: usize| {
        let mut k = T::zero();
        for i in 0..n {
            for j in 0..n {
                k = k + psi[i][x].clone() * ginv[i][j].clone() * phi[j][y].clone();
            }
        }
        k
    };
    let m: Vec<Vec<T>> = (0..atoms)
        .map(|x| {
            (0..atoms)
                .map(|y| {
                    let d = if x == y { T::one() } else { T::zero() };
                    d + g[x].clone() * kernel(x, y) * w[y].clone()
                })
                .collect()
        })
        .collect();
    Ok((ratio, determinant(m)))
}
