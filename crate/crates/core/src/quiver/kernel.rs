use std::fmt;

use super::McKayQuiver;

/// A binomial `z^{plus} - z^{minus}` in the arrow variables `z_i^ρ`, stored
/// as exponent vectors in canonical arrow order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Binomial {
    pub plus: Vec<u32>,
    pub minus: Vec<u32>,
}

impl Binomial {
    pub fn from_difference(v: &[i64]) -> Self {
        Self {
            plus: v.iter().map(|&x| x.max(0) as u32).collect(),
            minus: v.iter().map(|&x| (-x).max(0) as u32).collect(),
        }
    }

    /// The same binomial up to sign, with the lexicographically larger
    /// monomial first.
    pub fn canonical(&self) -> Self {
        if self.plus >= self.minus {
            self.clone()
        } else {
            Self {
                plus: self.minus.clone(),
                minus: self.plus.clone(),
            }
        }
    }

    pub fn display<'a>(&'a self, quiver: &'a McKayQuiver) -> impl fmt::Display + 'a {
        BinomialDisplay { b: self, quiver }
    }
}

struct BinomialDisplay<'a> {
    b: &'a Binomial,
    quiver: &'a McKayQuiver,
}

impl fmt::Display for BinomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let monomial = |f: &mut fmt::Formatter<'_>, exps: &[u32]| -> fmt::Result {
            let mut any = false;
            for (idx, &e) in exps.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let a = &self.quiver.arrows()[idx];
                write!(f, "z_{}^{{rho_{}}}", a.label, a.head)?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
                any = true;
            }
            if !any {
                write!(f, "1")?;
            }
            Ok(())
        };
        monomial(f, &self.b.plus)?;
        write!(f, " - ")?;
        monomial(f, &self.b.minus)
    }
}

/// The vectors `c_{i,j}^ρ = e_i^ρ + e_j^{ρρ_i} - e_j^ρ - e_i^{ρρ_j}` for
/// `i < j` and every vertex `ρ`, ordered by `ρ`, then `(i, j)`.
///
/// They span `ker_Z(C)`, and as binomials they are the defining relations
/// of the representation scheme.
pub fn kernel_generators_cij(quiver: &McKayQuiver) -> Vec<Vec<i64>> {
    let n = quiver.dim();
    let mut out = Vec::with_capacity(quiver.num_vertices() * n * n.saturating_sub(1) / 2);
    for rho in 0..quiver.num_vertices() {
        for i in 1..=n {
            for j in i + 1..=n {
                let mut v = vec![0i64; quiver.num_arrows()];
                v[quiver.arrow_index(rho, i)] += 1;
                v[quiver.arrow_index(quiver.shift(rho, i, 1), j)] += 1;
                v[quiver.arrow_index(rho, j)] -= 1;
                v[quiver.arrow_index(quiver.shift(rho, j, 1), i)] -= 1;
                out.push(v);
            }
        }
    }
    out
}
