//! Truncated power series: inversion, reversion and numerator fitting.
use catalan_hankel::catalan::catalan_seq;
use catalan_hankel::hankel::hankel_transform;
use catalan_hankel::ring::Integer;
use catalan_hankel::series::{fit_rational_gf, Polynomial, PowerSeries};

fn main() {
    let order = 8;
    let one_minus_x = PowerSeries::<Integer>::from_i64(&[1, -1], order);
    println!("1/(1-x)       = {}", one_minus_x.inverse().unwrap());

    // x c(x) is the reversion of x - x^2
    let f = PowerSeries::<Integer>::from_i64(&[0, 1, -1], order);
    println!("rev(x - x^2)  = {}", f.revert().unwrap());

    // 1 + x * (Hankel transform of C_{n+3}) has numerator 1 + x over (1-x)^4
    let h = hankel_transform(&catalan_seq(30)[3..], 11).unwrap();
    let mut terms = vec![Integer::from(1)];
    terms.extend(h);
    let series = PowerSeries::from_coeffs(terms, 12);
    let den = Polynomial::from_i64(&[1, -1]).pow(4);
    println!("numerator     = {}", fit_rational_gf(&series, &den, 3).unwrap());
}
