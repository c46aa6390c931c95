//! Exact zeta(2k)/pi^(2k) and beta(2k+1)/pi^(2k+1) from Bernoulli and Euler numbers.

use unimass::exact::{bernoulli, beta_odd_ratio, euler_even, zeta_even_ratio};

fn main() {
    for k in 1..=8u32 {
        println!("zeta({:>2}) = pi^{:<2} * {}", 2 * k, 2 * k, zeta_even_ratio(k));
    }
    for k in 0..=7u32 {
        println!("beta({:>2}) = pi^{:<2} * {}", 2 * k + 1, 2 * k + 1, beta_odd_ratio(k));
    }
    println!("B_12 = {}, E_10 = {}", bernoulli(12), euler_even(5));
}
