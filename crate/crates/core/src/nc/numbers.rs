//! Exact combinatorial numbers used throughout the crate.

use serde::Serialize;

pub fn factorial(n: u32) -> i128 {
    (1..=n as i128).product()
}

/// Generalized binomial coefficient `top choose k`, valid for negative `top`.
pub fn binomial(top: i128, k: u32) -> i128 {
    let mut num: i128 = 1;
    for i in 0..k as i128 {
        num *= top - i;
    }
    num / factorial(k)
}

/// Stirling numbers of the second kind.
pub fn stirling2(n: u32, k: u32) -> i128 {
    let (n, k) = (n as usize, k as usize);
    let mut row = vec![0i128; k + 1];
    row[0] = 1;
    for m in 1..=n {
        for j in (0..=k.min(m)).rev() {
            row[j] = if j == 0 {
                0
            } else {
                j as i128 * row[j] + row[j - 1]
            };
        }
    }
    row[k]
}

pub fn catalan(n: u32) -> i128 {
    fuss_catalan(n, 2)
}

/// `1/(kn+1) * binomial(kn+1, n)`, a polynomial in `k` of degree `n-1`.
/// It counts `(k-1)`-element multichains in `NC_n`; `k = 2` gives Catalan.
pub fn fuss_catalan(n: u32, k: i64) -> i128 {
    if n == 0 {
        return 1;
    }
    let kn = k as i128 * n as i128;
    let mut num: i128 = 1;
    for i in 0..(n as i128 - 1) {
        num *= kn - i;
    }
    num / factorial(n)
}

/// Tagged request for one of the numbers above.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum NumberKind {
    Catalan { n: u32 },
    FussCatalan { n: u32, k: i64 },
    Stirling2 { n: u32, k: u32 },
    Binomial { top: i128, k: u32 },
    Factorial { n: u32 },
}

pub fn combinatorial_number(kind: NumberKind) -> i128 {
    match kind {
        NumberKind::Catalan { n } => catalan(n),
        NumberKind::FussCatalan { n, k } => fuss_catalan(n, k),
        NumberKind::Stirling2 { n, k } => stirling2(n, k),
        NumberKind::Binomial { top, k } => binomial(top, k),
        NumberKind::Factorial { n } => factorial(n),
    }
}
