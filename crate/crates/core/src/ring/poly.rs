//! Dense polynomials over a prime field, just enough to pick a modulus and
//! multiply residues for `gf:q`.

/// Coefficients in ascending degree, each in `0..p`.
pub(crate) type Poly = Vec<usize>;

fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn degree(a: &[usize]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn inv_mod(a: usize, p: usize) -> usize {
    (1..p).find(|&b| a * b % p == 1).expect("nonzero residue mod a prime is invertible")
}

/// Remainder of `a` divided by `b` over `Z_p`. `b` must be nonzero.
pub(crate) fn rem(a: &[usize], b: &[usize], p: usize) -> Poly {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = inv_mod(b[db], p);
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let factor = r[dr] * lead_inv % p;
        let shift = dr - db;
        for (i, &c) in b.iter().enumerate().take(db + 1) {
            r[shift + i] = (r[shift + i] + p - factor * c % p) % p;
        }
        r = trim(r);
    }
    r
}

pub(crate) fn mul(a: &[usize], b: &[usize], p: usize) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    trim(out)
}

/// Monic polynomial of degree `deg` whose lower coefficients are the base-`p`
/// digits of `code` (least significant digit = constant term).
fn monic_from_code(mut code: usize, deg: usize, p: usize) -> Poly {
    let mut out = Vec::with_capacity(deg + 1);
    for _ in 0..deg {
        out.push(code % p);
        code /= p;
    }
    out.push(1);
    out
}

fn is_irreducible(f: &[usize], p: usize) -> bool {
    let deg = degree(f).unwrap_or(0);
    for d in 1..=deg / 2 {
        for code in 0..p.pow(d as u32) {
            let g = monic_from_code(code, d, p);
            if rem(f, &g, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// The first monic irreducible polynomial of degree `k` over `Z_p`, scanning
/// lower-coefficient codes upward from 0. For example `x^2 + 1` over `Z_3`,
/// `x^2 + x + 1` over `Z_2`, `x^3 + x + 1` over `Z_2`.
pub(crate) fn first_irreducible(p: usize, k: usize) -> Poly {
    (0..p.pow(k as u32))
        .map(|code| monic_from_code(code, k, p))
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}
