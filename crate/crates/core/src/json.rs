//! JSON helpers. Integers are written as exact JSON numbers of any size;
//! polynomial and series coefficients as decimal strings, lowest degree first.

use std::fmt::Display;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde_json::{Number, Value};

use crate::poly::Poly;

pub fn int(v: &BigInt) -> Value {
    Value::Number(v.to_string().parse::<Number>().expect("decimal integer is a JSON number"))
}

pub fn coeff_strings<T: Display + Clone + Zero + One + PartialEq>(p: &Poly<T>) -> Value {
    Value::Array(p.coeffs().iter().map(|c| Value::String(c.to_string())).collect())
}

pub fn string_list<T: Display>(items: &[T]) -> Value {
    Value::Array(items.iter().map(|c| Value::String(c.to_string())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn big_numbers_stay_exact() {
        let big: BigInt = "-98765432109876543210987654321".parse().unwrap();
        assert_eq!(serde_json::to_string(&int(&big)).unwrap(), "-98765432109876543210987654321");
        let p = Poly::new(vec![BigInt::from(1), BigInt::from(0), BigInt::from(-1)]);
        assert_eq!(serde_json::to_string(&coeff_strings(&p)).unwrap(), r#"["1","0","-1"]"#);
    }
}
