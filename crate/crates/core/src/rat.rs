//! Exact rational scalars.
//!
//! Every scalar in this crate is a `Rat`: an arbitrary-precision rational
//! kept in lowest terms with positive denominator (`num_rational` maintains
//! that invariant as long as values are built through `Ratio::new` or
//! arithmetic, which we do everywhere). Zero is `0/1`.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// Integer as a `Rat`.
pub fn rat<T: Into<BigInt>>(n: T) -> Rat {
    Rat::from_integer(n.into())
}

/// Fraction `num/den` as a `Rat`. Panics on zero denominator.
pub fn frac<T: Into<BigInt>, U: Into<BigInt>>(num: T, den: U) -> Rat {
    Rat::new(num.into(), den.into())
}

/// Parses `"num"` or `"num/den"`.
pub fn parse_rat(text: &str) -> Result<Rat> {
    let t = text.trim();
    t.parse::<Rat>()
        .map_err(|e| Error::Parse(format!("bad rational {t:?}: {e}")))
}

/// Parses a decimal literal (`"0.25"`, `"1e-12"`, `"-3.5e2"`) or a plain
/// rational (`"1/3"`) into an exact `Rat`.
pub fn parse_decimal(text: &str) -> Result<Rat> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::Parse("empty number".into()));
    }
    if t.contains('/') {
        return parse_rat(t);
    }
    let (mantissa, exp) = match t.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = t[pos + 1..]
                .parse()
                .map_err(|_| Error::Parse(format!("bad exponent in {t:?}")))?;
            (&t[..pos], e)
        }
        None => (t, 0),
    };
    let (int_part, frac_part) = match mantissa.find('.') {
        Some(pos) => (&mantissa[..pos], &mantissa[pos + 1..]),
        None => (mantissa, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return Err(Error::Parse(format!("bad number {t:?}")));
    }
    let num: BigInt = digits
        .parse()
        .map_err(|_| Error::Parse(format!("bad number {t:?}")))?;
    let shift = exp - frac_part.len() as i64;
    let ten = BigInt::from(10);
    Ok(if shift >= 0 {
        Rat::from_integer(num * ten.pow(shift as u32))
    } else {
        Rat::new(num, ten.pow((-shift) as u32))
    })
}

/// Rounds `r` to `sig` significant digits and renders it in decimal.
///
/// Values far outside `[10^-4, 10^(sig+4)]` use scientific notation.
pub fn to_decimal(r: &Rat, sig: usize) -> String {
    assert!(sig >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let a = r.abs();
    // decimal exponent e with 10^e <= a < 10^(e+1)
    let ten = BigInt::from(10);
    let digits_of = |n: &BigInt| n.to_string().trim_start_matches('-').len() as i64;
    let mut e = digits_of(a.numer()) - digits_of(a.denom());
    let pow10 = |k: i64| -> Rat {
        if k >= 0 {
            Rat::from_integer(ten.pow(k as u32))
        } else {
            Rat::new(BigInt::one(), ten.pow((-k) as u32))
        }
    };
    while a >= pow10(e + 1) {
        e += 1;
    }
    while a < pow10(e) {
        e -= 1;
    }
    // round a / 10^(e+1-sig) half away from zero
    let scaled = &a / pow10(e + 1 - sig as i64);
    let mut m = (scaled.numer() * 2 + scaled.denom()) / (scaled.denom() * 2);
    if digits_of(&m) as usize > sig {
        // 9.99... rounded up to 10.0...
        m /= &ten;
        e += 1;
    }
    let ds = m.to_string();
    let body = if e >= 0 && (e as usize) < sig {
        let point = e as usize + 1;
        format!("{}.{}", &ds[..point], &ds[point..])
    } else if (-4..0).contains(&e) {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), ds)
    } else if e >= 0 && (e as usize) < sig + 4 {
        format!("{}{}", ds, "0".repeat(e as usize + 1 - sig))
    } else {
        format!("{}.{}e{}", &ds[..1], &ds[1..], e)
    };
    let body = if body.ends_with('.') {
        body.trim_end_matches('.').to_string()
    } else {
        body
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// The rational with smallest denominator (then smallest numerator) in the
/// closed interval `[lo, hi]`, by Stern-Brocot descent.
pub fn simplest_in_interval(lo: &Rat, hi: &Rat) -> Rat {
    assert!(lo <= hi);
    if !lo.is_positive() && !hi.is_negative() {
        return Rat::zero();
    }
    if hi.is_negative() {
        return -simplest_positive(&-hi.clone(), &-lo.clone());
    }
    simplest_positive(lo, hi)
}

fn simplest_positive(lo: &Rat, hi: &Rat) -> Rat {
    // 0 < lo <= hi
    let ceil_lo = lo.ceil();
    if &ceil_lo <= hi {
        return ceil_lo;
    }
    let fl = lo.floor();
    let inner = simplest_positive(&(Rat::one() / (hi - &fl)), &(Rat::one() / (lo - &fl)));
    fl + Rat::one() / inner
}
