//! Constructors for the supported ring families.
//!
//! Encodings:
//! - `zmod:m`: element `i` is the residue `i`.
//! - `gf:q`, `q = p^k`: element index is `sum c_j p^j` for the residue
//!   `sum c_j a^j` modulo the first monic irreducible of degree `k` (see
//!   [`poly::first_irreducible`]). Names use `a` for the class of `x`.
//! - `chain:q,e`: element index is `sum c_j q^j` for `sum c_j u^j` with
//!   `c_j` indices in `gf:q`.
//! - `mat:k,q`: entries read row-major as base-`q` digits, first entry most
//!   significant, so the zero matrix is 0.

use super::{poly, Elem, FiniteRing, RingError, RingFamily, MAX_FIELD_SIZE, MAX_RING_SIZE};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingDescriptor {
    Zmod(usize),
    Gf(usize),
    Chain(usize, u32),
    Mat(usize, usize),
}

fn prime_power(q: usize) -> Option<(usize, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

fn parse_num(spec: &str, s: &str) -> Result<usize, RingError> {
    s.trim()
        .parse()
        .map_err(|_| RingError::MalformedSpec(spec.to_string()))
}

pub fn parse_descriptor(spec: &str) -> Result<RingDescriptor, RingError> {
    let malformed = || RingError::MalformedSpec(spec.to_string());
    let (family, args) = spec.trim().split_once(':').ok_or_else(malformed)?;
    let args: Vec<&str> = args.split(',').collect();
    let desc = match (family.trim(), args.as_slice()) {
        ("zmod", [m]) => RingDescriptor::Zmod(parse_num(spec, m)?),
        ("gf", [q]) => RingDescriptor::Gf(parse_num(spec, q)?),
        ("chain", [q, e]) => RingDescriptor::Chain(parse_num(spec, q)?, parse_num(spec, e)? as u32),
        ("mat", [k, q]) => RingDescriptor::Mat(parse_num(spec, k)?, parse_num(spec, q)?),
        _ => return Err(malformed()),
    };
    validate(spec, desc)?;
    Ok(desc)
}

fn validate(spec: &str, desc: RingDescriptor) -> Result<(), RingError> {
    let too_large = |size: u128, cap: usize| RingError::TooLarge {
        spec: spec.to_string(),
        size,
        cap,
    };
    match desc {
        RingDescriptor::Zmod(m) => {
            if m < 2 {
                return Err(RingError::MalformedSpec(spec.to_string()));
            }
            if m > MAX_RING_SIZE {
                return Err(too_large(m as u128, MAX_RING_SIZE));
            }
        }
        RingDescriptor::Gf(q) => {
            if q > MAX_FIELD_SIZE {
                return Err(too_large(q as u128, MAX_FIELD_SIZE));
            }
            prime_power(q).ok_or(RingError::NotPrimePower(q))?;
        }
        RingDescriptor::Chain(q, e) => {
            if e < 1 {
                return Err(RingError::MalformedSpec(spec.to_string()));
            }
            let size = (q as u128).checked_pow(e).unwrap_or(u128::MAX);
            if size > MAX_RING_SIZE as u128 {
                return Err(too_large(size, MAX_RING_SIZE));
            }
            prime_power(q).ok_or(RingError::NotPrimePower(q))?;
        }
        RingDescriptor::Mat(k, q) => {
            if k < 1 {
                return Err(RingError::MalformedSpec(spec.to_string()));
            }
            let size = (q as u128).checked_pow((k * k) as u32).unwrap_or(u128::MAX);
            if size > MAX_RING_SIZE as u128 {
                return Err(too_large(size, MAX_RING_SIZE));
            }
            prime_power(q).ok_or(RingError::NotPrimePower(q))?;
        }
    }
    Ok(())
}

pub(crate) fn build(desc: &RingDescriptor) -> Result<FiniteRing, RingError> {
    Ok(match *desc {
        RingDescriptor::Zmod(m) => zmod(m),
        RingDescriptor::Gf(q) => field(q),
        RingDescriptor::Chain(q, e) => chain(q, e),
        RingDescriptor::Mat(k, q) => matrix(k, q),
    })
}

fn tables(size: usize, add: impl Fn(usize, usize) -> usize, mul: impl Fn(usize, usize) -> usize) -> (Vec<Elem>, Vec<Elem>) {
    let mut a = Vec::with_capacity(size * size);
    let mut m = Vec::with_capacity(size * size);
    for x in 0..size {
        for y in 0..size {
            a.push(add(x, y));
            m.push(mul(x, y));
        }
    }
    (a, m)
}

fn digits(mut index: usize, base: usize, len: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(index % base);
        index /= base;
    }
    out
}

fn undigits(ds: &[usize], base: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * base + d)
}

fn zmod(m: usize) -> FiniteRing {
    let (add, mul) = tables(m, |a, b| (a + b) % m, |a, b| a * b % m);
    let names = (0..m).map(|i| i.to_string()).collect();
    FiniteRing::from_tables(format!("zmod:{m}"), RingFamily::Zmod { m }, add, mul, 1 % m, names, &[])
}

fn term(coef: &str, symbol: &str, deg: usize) -> String {
    let power = if deg == 1 { symbol.to_string() } else { format!("{symbol}^{deg}") };
    match coef {
        "1" => power,
        c if c.contains('+') => format!("({c}){power}"),
        c => format!("{c}{power}"),
    }
}

fn poly_name(coefs: &[&str], symbol: &str) -> String {
    let terms: Vec<String> = coefs
        .iter()
        .enumerate()
        .filter(|(_, c)| **c != "0")
        .map(|(d, c)| if d == 0 { c.to_string() } else { term(c, symbol, d) })
        .collect();
    if terms.is_empty() {
        "0".to_string()
    } else {
        terms.join("+")
    }
}

/// `gf:q`. Callers have already validated that `q` is a prime power.
pub(crate) fn field(q: usize) -> FiniteRing {
    let (p, k) = prime_power(q).expect("validated prime power");
    let k = k as usize;
    let modulus = poly::first_irreducible(p, k);
    let elems: Vec<Vec<usize>> = (0..q).map(|i| digits(i, p, k)).collect();
    let (add, mul) = tables(
        q,
        |a, b| {
            let s: Vec<usize> = elems[a].iter().zip(&elems[b]).map(|(x, y)| (x + y) % p).collect();
            undigits(&s, p)
        },
        |a, b| {
            let prod = poly::rem(&poly::mul(&elems[a], &elems[b], p), &modulus, p);
            undigits(&prod, p)
        },
    );
    let names = if k == 1 {
        (0..q).map(|i| i.to_string()).collect()
    } else {
        elems
            .iter()
            .map(|cs| {
                let strs: Vec<String> = cs.iter().map(|c| c.to_string()).collect();
                let refs: Vec<&str> = strs.iter().map(String::as_str).collect();
                poly_name(&refs, "a")
            })
            .collect()
    };
    FiniteRing::from_tables(
        format!("gf:{q}"),
        RingFamily::Galois { p, k: k as u32 },
        add,
        mul,
        1,
        names,
        &[],
    )
}

fn chain(q: usize, e: u32) -> FiniteRing {
    let base = field(q);
    let e = e as usize;
    let size = q.pow(e as u32);
    let elems: Vec<Vec<usize>> = (0..size).map(|i| digits(i, q, e)).collect();
    let (add, mul) = tables(
        size,
        |a, b| {
            let s: Vec<usize> = elems[a].iter().zip(&elems[b]).map(|(&x, &y)| base.add(x, y)).collect();
            undigits(&s, q)
        },
        |a, b| {
            let mut out = vec![0; e];
            for (i, &x) in elems[a].iter().enumerate() {
                for (j, &y) in elems[b].iter().enumerate().take(e - i) {
                    out[i + j] = base.add(out[i + j], base.mul(x, y));
                }
            }
            undigits(&out, q)
        },
    );
    let names = elems
        .iter()
        .map(|cs| {
            let refs: Vec<&str> = cs.iter().map(|&c| base.name(c)).collect();
            poly_name(&refs, "u")
        })
        .collect();
    FiniteRing::from_tables(
        format!("chain:{q},{e}"),
        RingFamily::Chain { q, e: e as u32 },
        add,
        mul,
        1,
        names,
        &[],
    )
}

fn matrix(k: usize, q: usize) -> FiniteRing {
    let base = field(q);
    let cells = k * k;
    let size = q.pow(cells as u32);
    // most significant digit first
    let entries = |i: usize| -> Vec<usize> {
        let mut ds = digits(i, q, cells);
        ds.reverse();
        ds
    };
    let encode = |es: &[usize]| -> usize { es.iter().fold(0, |acc, &d| acc * q + d) };
    let elems: Vec<Vec<usize>> = (0..size).map(entries).collect();
    let (add, mul) = tables(
        size,
        |a, b| {
            let s: Vec<usize> = elems[a].iter().zip(&elems[b]).map(|(&x, &y)| base.add(x, y)).collect();
            encode(&s)
        },
        |a, b| {
            let (x, y) = (&elems[a], &elems[b]);
            let mut out = vec![0; cells];
            for r in 0..k {
                for c in 0..k {
                    let mut acc = 0;
                    for t in 0..k {
                        acc = base.add(acc, base.mul(x[r * k + t], y[t * k + c]));
                    }
                    out[r * k + c] = acc;
                }
            }
            encode(&out)
        },
    );
    let mut id = vec![0; cells];
    for r in 0..k {
        id[r * k + r] = 1;
    }
    let one = encode(&id);
    let names = elems
        .iter()
        .map(|es| {
            let rows: Vec<String> = es
                .chunks(k)
                .map(|row| {
                    let cols: Vec<&str> = row.iter().map(|&c| base.name(c)).collect();
                    format!("[{}]", cols.join(","))
                })
                .collect();
            format!("[{}]", rows.join(","))
        })
        .collect();
    FiniteRing::from_tables(
        format!("mat:{k},{q}"),
        RingFamily::Matrix { k, q },
        add,
        mul,
        one,
        names,
        &[("I", one), ("0", 0)],
    )
}

/// Entries of a matrix-ring element over `gf:q`, row-major.
pub(crate) fn matrix_entries(index: Elem, k: usize, q: usize) -> Vec<Elem> {
    let mut ds = digits(index, q, k * k);
    ds.reverse();
    ds
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(128), Some((2, 7)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
    }

    #[test]
    fn gf4_names_and_generator() {
        let f = field(4);
        assert_eq!(f.names(), &["0", "1", "a", "1+a"]);
        let a = f.parse_elem("a").unwrap();
        // a^2 = a + 1 under x^2 + x + 1
        assert_eq!(f.name(f.mul(a, a)), "1+a");
    }

    #[test]
    fn matrix_encoding_is_row_major_msd_first() {
        let r = matrix(2, 2);
        // [[1,0],[0,1]] = 1001b
        assert_eq!(r.one(), 9);
        assert_eq!(r.name(12), "[[1,1],[0,0]]");
        assert_eq!(matrix_entries(12, 2, 2), vec![1, 1, 0, 0]);
    }

    #[test]
    fn chain_over_extension_field_names() {
        let r = chain(4, 2);
        assert_eq!(r.size(), 16);
        assert!(r.names().iter().any(|n| n == "(1+a)u"));
    }
}
