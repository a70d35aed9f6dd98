use crate::scalar::Field;

/// Determinant of the Vandermonde matrix `M[j][k] = x_j^k` by Gaussian
/// elimination.
pub fn vandermonde_determinant<F: Field>(xs: &[F]) -> F {
    let n = xs.len();
    let mut m: Vec<Vec<F>> = xs
        .iter()
        .map(|x| (0..n).map(|k| x.pow(k as u32)).collect())
        .collect();
    let mut det = F::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return F::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let inv = m[col][col].inverse().expect("pivot is nonzero");
        det = det * m[col][col].clone();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone() * inv.clone();
            for k in col..n {
                let v = m[r][k].clone() - factor.clone() * m[col][k].clone();
                m[r][k] = v;
            }
        }
    }
    det
}

/// `(-1)^C(n,2) * prod_{j < j'} (x_j - x_j')`.
pub fn signed_difference_product<F: Field>(xs: &[F]) -> F {
    let n = xs.len();
    let mut acc = F::one();
    for j in 0..n {
        for l in j + 1..n {
            acc = acc * (xs[j].clone() - xs[l].clone());
        }
    }
    if (n * n.saturating_sub(1) / 2) % 2 == 1 {
        -acc
    } else {
        acc
    }
}

/// Whether the clique factor `Q`, up to its fixed sign, equals the
/// Vandermonde determinant at `xs`.
pub fn vandermonde_check<F: Field>(xs: &[F]) -> bool {
    vandermonde_determinant(xs) == signed_difference_product(xs)
}
