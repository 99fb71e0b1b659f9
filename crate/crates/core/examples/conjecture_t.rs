//! The T(n,k,m) closed form: truncated arrays and the polynomial check.
use catalan_hankel::catalan::{t_polynomial, verify_t};
use catalan_hankel::identities::t_array;

fn main() {
    for m in 2..=5 {
        println!("T(n,k,{m}):\n{}", t_array(m, 5).unwrap());
    }
    println!("sum_k T(2,k,3) b^(3-k) a^k = {}", t_polynomial(2, 3).unwrap());
    let report = verify_t(5, 6).unwrap();
    println!("{report}");
}
