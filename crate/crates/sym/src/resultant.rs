//! Sylvester resultants.
//!
//! Sign convention: `Res(f, g) = det S(f, g)` where the first `deg g` rows of
//! the Sylvester matrix hold the shifted coefficients of `f` (leading
//! coefficient first) and the remaining `deg f` rows those of `g`. With this
//! convention `Res(x - a, x - b) = a - b`.

use crate::error::SymError;
use crate::par::Execution;
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetMethod {
    /// Fraction-free Gaussian elimination with row pivoting.
    Bareiss,
    /// Laplace expansion along the first row. Exponential; test oracle only.
    Cofactor,
}

/// Sylvester matrix of `f` and `g` with respect to variable `var`.
pub fn sylvester_matrix(
    f: &Polynomial,
    g: &Polynomial,
    var: usize,
) -> Result<Vec<Vec<Polynomial>>, SymError> {
    f.ring().check_same(g.ring())?;
    let df = f.degree_in(var).unwrap_or(0);
    let dg = g.degree_in(var).unwrap_or(0);
    if df == 0 || dg == 0 {
        return Err(SymError::DegreeZero {
            var: f.ring().name(var).to_string(),
            left: df,
            right: dg,
        });
    }
    let (m, n) = (df as usize, dg as usize);
    let size = m + n;
    let zero = Polynomial::zero(f.ring());
    let fc: Vec<Polynomial> = f.coeffs_in(var).into_iter().rev().collect();
    let gc: Vec<Polynomial> = g.coeffs_in(var).into_iter().rev().collect();
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for (j, c) in fc.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for (j, c) in gc.iter().enumerate() {
            row[i + j] = c.clone();
        }
        rows.push(row);
    }
    Ok(rows)
}

/// Determinant by fraction-free (Bareiss) elimination. Row updates below the
/// pivot run in parallel when `exec` allows it.
pub fn bareiss_det(mut m: Vec<Vec<Polynomial>>, exec: Execution) -> Polynomial {
    let size = m.len();
    assert!(m.iter().all(|r| r.len() == size), "matrix must be square");
    if size == 0 {
        panic!("empty matrix");
    }
    let ring = m[0][0].ring().clone();
    let mut negate = false;
    let mut prev = Polynomial::one(&ring);
    for k in 0..size.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return Polynomial::zero(&ring),
            }
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let prev_ref = &prev;
        exec.for_each_mut(bottom, |row| {
            let factor = row[k].clone();
            for j in k + 1..size {
                let t = &(&pivot_row[k] * &row[j]) - &(&factor * &pivot_row[j]);
                row[j] = t.div_exact(prev_ref).expect("Bareiss step divides exactly");
            }
            row[k] = Polynomial::zero(prev_ref.ring());
        });
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Determinant by Laplace expansion.
pub fn cofactor_det(m: &[Vec<Polynomial>]) -> Polynomial {
    let size = m.len();
    assert!(
        size > 0 && m.iter().all(|r| r.len() == size),
        "matrix must be square and non-empty"
    );
    let cols: Vec<usize> = (0..size).collect();
    expand(m, 0, &cols)
}

fn expand(m: &[Vec<Polynomial>], row: usize, cols: &[usize]) -> Polynomial {
    if cols.len() == 1 {
        return m[row][cols[0]].clone();
    }
    let ring = m[0][0].ring();
    let mut acc = Polynomial::zero(ring);
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let minor = expand(m, row + 1, &rest);
        let term = entry * &minor;
        if pos % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

/// Resultant of `f` and `g` in `var` by Bareiss elimination.
pub fn resultant(f: &Polynomial, g: &Polynomial, var: usize) -> Result<Polynomial, SymError> {
    resultant_with(f, g, var, DetMethod::Bareiss, Execution::default())
}

pub fn resultant_by_name(
    f: &Polynomial,
    g: &Polynomial,
    var: &str,
) -> Result<Polynomial, SymError> {
    resultant(f, g, f.ring().index_of(var)?)
}

pub fn resultant_with(
    f: &Polynomial,
    g: &Polynomial,
    var: usize,
    method: DetMethod,
    exec: Execution,
) -> Result<Polynomial, SymError> {
    let s = sylvester_matrix(f, g, var)?;
    Ok(match method {
        DetMethod::Bareiss => bareiss_det(s, exec),
        DetMethod::Cofactor => cofactor_det(&s),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::text::parse;
    use crate::Ring;

    fn ring() -> Ring {
        Ring::new(&["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        parse(&ring(), s).unwrap()
    }

    #[test]
    fn documented_sign_convention() {
        assert_eq!(resultant(&p("x - 2"), &p("x - 5"), 0).unwrap(), p("-3"));
        assert_eq!(resultant(&p("x - 5"), &p("x - 2"), 0).unwrap(), p("3"));
    }

    #[test]
    fn resultant_examples() {
        assert!(resultant(&p("(x - 1)*(x - 3)"), &p("x - 1"), 0)
            .unwrap()
            .is_zero());
        assert_eq!(resultant(&p("x^2 + 1"), &p("x + 1"), 0).unwrap(), p("2"));
    }

    #[test]
    fn degree_zero_rejected() {
        let e = resultant(&p("y + 1"), &p("x"), 0).unwrap_err();
        assert!(matches!(
            e,
            SymError::DegreeZero {
                left: 0,
                right: 1,
                ..
            }
        ));
        assert!(e.to_string().contains("separately"));
    }

    #[test]
    fn bivariate_resultant_matches_oracle() {
        let f = p("x^2*y + x - y^2 + 3");
        let g = p("y*x^3 - 2*x + y");
        let a = resultant_with(&f, &g, 0, DetMethod::Bareiss, Execution::Sequential).unwrap();
        let b = resultant_with(&f, &g, 0, DetMethod::Cofactor, Execution::Sequential).unwrap();
        let c = resultant_with(&f, &g, 0, DetMethod::Bareiss, Execution::Parallel).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert!(a.degree_in(0).unwrap_or(0) == 0);
    }

    #[test]
    fn pivoting_on_zero_leading_entries() {
        // Zero pivots appear when the leading coefficient vanishes below the
        // first row; Bareiss must swap rows and track the sign.
        let m = vec![
            vec![p("0"), p("1"), p("2")],
            vec![p("1"), p("0"), p("3")],
            vec![p("4"), p("-3"), p("8")],
        ];
        assert_eq!(
            bareiss_det(m.clone(), Execution::Sequential),
            cofactor_det(&m)
        );
        assert_eq!(cofactor_det(&m), p("-2"));
    }
}
