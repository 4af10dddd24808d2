//! The symbol universe of the replay and the expressions built from it.
//!
//! Principal curvatures along the adapted frame are
//! `λ1 = c1·H`, `λ2 = β`, `λ3 = c2·H - β` and `λj = (c1 + c2)·H` for
//! `j >= 4`, with `c1 = -n/2` and `c2 = n²/(2(n-2))`. The connection forms
//! `ω_21², ω_31³, ω_41⁴` are the symbols `w212, w313, w414`; `E` is `e1(H)`,
//! `Ed` is `e1e1(H)`, `Bd` is `e1(β)`, `Bt` is a transversal derivative of
//! `β`, and `h` aggregates the mixed coefficients `h_j`.

use dnull_sym::{Monomial, Polynomial, Rational, Ring};

pub const VARIABLES: [&str; 11] = [
    "H", "beta", "a", "w212", "w313", "w414", "E", "Ed", "h", "Bd", "Bt",
];

/// Indices into [`VARIABLES`].
pub mod var {
    pub const H: usize = 0;
    pub const BETA: usize = 1;
    pub const A: usize = 2;
    pub const W2: usize = 3;
    pub const W3: usize = 4;
    pub const W4: usize = 5;
    pub const E: usize = 6;
    pub const ED: usize = 7;
    pub const HAGG: usize = 8;
    pub const BD: usize = 9;
    pub const BT: usize = 10;
}

/// `c1 = -n/2`, `c2 = n²/(2(n-2))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Constants {
    pub n: u32,
    pub c1: Rational,
    pub c2: Rational,
}

impl Constants {
    pub fn new(n: u32) -> Self {
        assert!(n >= 3, "c2 needs n > 2");
        let ni = i64::from(n);
        Constants {
            n,
            c1: Rational::ratio(-ni, 2),
            c2: Rational::ratio(ni * ni, 2 * (ni - 2)),
        }
    }

    /// `c1 + c2 = n/(n-2)`, the repeated curvature over `H`.
    pub fn sum(&self) -> Rational {
        &self.c1 + &self.c2
    }

    /// Multiplicity `n - 3` of the repeated curvature.
    pub fn tail(&self) -> Rational {
        Rational::integer(i64::from(self.n) - 3)
    }

    pub fn n(&self) -> Rational {
        Rational::integer(i64::from(self.n))
    }
}

/// Ring, constants and named expressions for one dimension `n`.
#[derive(Debug, Clone)]
pub struct Frame {
    pub ring: Ring,
    pub k: Constants,
}

impl Frame {
    pub fn new(n: u32) -> Self {
        Frame {
            ring: Ring::new(&VARIABLES).expect("fixed variable list"),
            k: Constants::new(n),
        }
    }

    pub fn v(&self, idx: usize) -> Polynomial {
        Polynomial::monomial(
            &self.ring,
            Rational::one(),
            unit_monomial(self.ring.len(), idx, 1),
        )
    }

    pub fn c(&self, q: impl Into<Rational>) -> Polynomial {
        Polynomial::constant(&self.ring, q)
    }

    pub fn h(&self) -> Polynomial {
        self.v(var::H)
    }
    pub fn beta(&self) -> Polynomial {
        self.v(var::BETA)
    }
    pub fn a(&self) -> Polynomial {
        self.v(var::A)
    }
    pub fn w2(&self) -> Polynomial {
        self.v(var::W2)
    }
    pub fn w3(&self) -> Polynomial {
        self.v(var::W3)
    }
    pub fn w4(&self) -> Polynomial {
        self.v(var::W4)
    }
    pub fn e(&self) -> Polynomial {
        self.v(var::E)
    }
    pub fn ed(&self) -> Polynomial {
        self.v(var::ED)
    }
    pub fn bd(&self) -> Polynomial {
        self.v(var::BD)
    }
    pub fn bt(&self) -> Polynomial {
        self.v(var::BT)
    }
    pub fn hagg(&self) -> Polynomial {
        self.v(var::HAGG)
    }

    /// `q·H + r·β`.
    pub fn lin(&self, q: &Rational, r: &Rational) -> Polynomial {
        &self.h().scale(q) + &self.beta().scale(r)
    }

    pub fn lambda1(&self) -> Polynomial {
        self.h().scale(&self.k.c1)
    }
    pub fn lambda2(&self) -> Polynomial {
        self.beta()
    }
    pub fn lambda3(&self) -> Polynomial {
        self.lin(&self.k.c2, &Rational::integer(-1))
    }
    pub fn lambda_rest(&self) -> Polynomial {
        self.h().scale(&self.k.sum())
    }

    /// `λ1 - λ2 = c1·H - β`.
    pub fn gap12(&self) -> Polynomial {
        &self.lambda1() - &self.lambda2()
    }

    /// `λ1 - λ3 = (c1 - c2)·H + β`.
    pub fn gap13(&self) -> Polynomial {
        &self.lambda1() - &self.lambda3()
    }

    /// `λ3 - λ2 = c2·H - 2β`.
    pub fn gap32(&self) -> Polynomial {
        &self.lambda3() - &self.lambda2()
    }

    /// `Σ λi²` with the repeated curvature counted `n - 3` times.
    pub fn trace_a2(&self) -> Polynomial {
        let rest = self.lambda_rest().pow(2).scale(&self.k.tail());
        &(&(&self.lambda1().pow(2) + &self.lambda2().pow(2)) + &self.lambda3().pow(2)) + &rest
    }

    /// Sum relation `(c1H - β)·w212 + ((c1 - c2)H + β)·w313 - c2·E`, the
    /// derivative of `λ2 + λ3 = c2·H` written with the connection forms.
    pub fn sum_relation(&self) -> Polynomial {
        &(&(&self.gap12() * &self.w2()) + &(&self.gap13() * &self.w3()))
            - &self.e().scale(&self.k.c2)
    }

    /// Normal relation `c2·H·w414 + (c1 + c2)·E`, i.e. `e1(λ4) = (λ1 - λ4)·ω_41⁴`.
    pub fn normal_relation(&self) -> Polynomial {
        &(&self.h() * &self.w4()).scale(&self.k.c2) + &self.e().scale(&self.k.sum())
    }

    /// Value `-(c1 + c2)/c2` taken by `H·w414 / E` on the normal relation.
    pub fn normal_ratio(&self) -> Rational {
        -(&self.k.sum() / &self.k.c2)
    }

    /// Replace every `H·w414` by `-(c1 + c2)/c2 · E`.
    pub fn rewrite_normal(&self, p: &Polynomial) -> Polynomial {
        let ratio = self.normal_ratio();
        Polynomial::from_terms(
            &self.ring,
            p.terms().map(|(m, c)| {
                let k = m.exponent(var::H).min(m.exponent(var::W4));
                if k == 0 {
                    return (m.clone(), c.clone());
                }
                let mut e = m.exponents().to_vec();
                e[var::H] -= k;
                e[var::W4] -= k;
                e[var::E] += k;
                (Monomial::from_exponents(e), c * &ratio.pow(k))
            }),
        )
    }

    /// Right side `K = (n-3)(c1+c2)c2·H² + β(c2H - β)` of the trace relation.
    pub fn trace_constant(&self) -> Polynomial {
        let k = &self.k;
        let first = self.h().pow(2).scale(&(&(&k.tail() * &k.sum()) * &k.c2));
        &first + &(&self.beta() * &self.lambda3())
    }

    /// Trace relation `s_jj(n-3)·w414·(w212 + w313) + s_33·w212·w313 - K`.
    pub fn trace_relation(&self, s_jj: i64, s_33: i64) -> Polynomial {
        let s = &self.w2() + &self.w3();
        let first = (&self.w4() * &s).scale(&(&Rational::integer(s_jj) * &self.k.tail()));
        let second = (&self.w2() * &self.w3()).scale(&Rational::integer(s_33));
        &(&first + &second) - &self.trace_constant()
    }
}

pub(crate) fn unit_monomial(len: usize, idx: usize, power: u32) -> Monomial {
    let mut e = vec![0; len];
    e[idx] = power;
    Monomial::from_exponents(e)
}

/// Monomial with the given `(variable, exponent)` pairs.
pub fn monomial_of(len: usize, parts: &[(usize, u32)]) -> Monomial {
    let mut e = vec![0; len];
    for &(v, k) in parts {
        e[v] += k;
    }
    Monomial::from_exponents(e)
}

/// Coefficient of an exact power pattern in the variables of `pattern`:
/// the terms of `p` whose exponents in those variables equal the pattern,
/// with those exponents removed.
pub fn coefficient_of(p: &Polynomial, pattern: &[(usize, u32)], watched: &[usize]) -> Polynomial {
    let ring = p.ring();
    let want = |v: usize| {
        pattern
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, k)| *k)
            .unwrap_or(0)
    };
    Polynomial::from_terms(
        ring,
        p.terms().filter_map(|(m, c)| {
            if watched.iter().all(|&v| m.exponent(v) == want(v)) {
                let mut e = m.exponents().to_vec();
                for &v in watched {
                    e[v] = 0;
                }
                Some((Monomial::from_exponents(e), c.clone()))
            } else {
                None
            }
        }),
    )
}

/// Replace every occurrence of the monomial `pattern` in `p` by `value`,
/// as many times as it divides each term.
pub fn replace_product(p: &Polynomial, pattern: &Monomial, value: &Polynomial) -> Polynomial {
    let ring = p.ring();
    let mut out = Polynomial::zero(ring);
    let mut powers: Vec<Polynomial> = vec![Polynomial::one(ring)];
    for (m, c) in p.terms() {
        let mut k = 0u32;
        let mut rest = m.clone();
        while pattern.divides(&rest) {
            rest = pattern.quotient_of(&rest);
            k += 1;
        }
        while powers.len() <= k as usize {
            let next = powers.last().expect("non-empty") * value;
            powers.push(next);
        }
        out = &out + &powers[k as usize].mul_monomial(&rest, c);
    }
    out
}
