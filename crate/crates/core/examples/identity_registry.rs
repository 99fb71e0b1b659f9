//! Runs every registered identity and prints the flagged readings.
use catalan_hankel::identities::{flagged_readings, verify_identity, IdentityParams, IDENTITY_NAMES};
use catalan_hankel::ring::rational;

fn main() {
    let symbolic = IdentityParams::default();
    for name in IDENTITY_NAMES {
        println!("{}", verify_identity(name, &symbolic).unwrap());
    }
    let numeric = IdentityParams { m: Some(5), a: Some(rational(2, 1)), b: Some(rational(3, 1)), ..Default::default() };
    println!("{}", verify_identity("abm-gf", &numeric).unwrap());
    for f in flagged_readings(6).unwrap() {
        println!("{} -> {}", f.tag, f.status);
    }
}
