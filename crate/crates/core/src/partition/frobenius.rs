//! Genus-g Frobenius numbers: homomorphism counts from the fundamental
//! group of a once-punctured genus-g surface.
//!
//! `A_g(G, C)` counts tuples (x_1..x_g, y_1..y_g, z) in G^2g x C with
//! commutator product [x_1,y_1]...[x_g,y_g] = z^-1. The closed form is
//! `|G|^(2g-1) |C| sum_l chi_l(C) / dim_l^(2g-1)`.

use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;

use crate::group::{CharacterTable, FiniteGroup, GroupError};

use super::{CountError, CountOptions, CountResult, CountValue, Method};

use super::flows::FlowMethod;

/// Frobenius count by the requested method.
pub fn frobenius_count(
    group: &Arc<FiniteGroup>,
    table: &CharacterTable,
    class: usize,
    genus: u32,
    method: FlowMethod,
    options: &CountOptions,
) -> Result<CountResult, CountError> {
    match method {
        FlowMethod::Brute => frobenius_count_brute(group, class, genus, options),
        FlowMethod::Formula => frobenius_count_formula(table, class, genus),
    }
}

/// Direct enumeration over G^2g.
pub fn frobenius_count_brute(
    group: &Arc<FiniteGroup>,
    class: usize,
    genus: u32,
    options: &CountOptions,
) -> Result<CountResult, CountError> {
    let classes = group.classes();
    if class >= classes.count() {
        return Err(GroupError::ClassOutOfRange(class, classes.count()).into());
    }
    let tuple_count = super::labeling_space_size(
        group.order(),
        2 * genus as usize,
        options.term_budget / classes.size(class).max(1) as u64,
    )
    .map_err(|_| CountError::BudgetExceeded {
        needed: format!("{}^{} * {}", group.order(), 2 * genus, classes.size(class)),
        budget: options.term_budget,
    })?;

    let mut count: u64 = 0;
    let mut digits = vec![0usize; 2 * genus as usize];
    for i in 0..tuple_count {
        if i != 0 {
            super::advance_labeling(&mut digits, group.order());
        }
        let mut product = 0usize;
        for pair in digits.chunks_exact(2) {
            product = group.mul(product, group.commutator(pair[0], pair[1]));
        }
        // z is forced: z = (prod of commutators)^-1; count it if it lies in C
        if classes.class_of(group.inv(product)) == class {
            count += 1;
        }
    }
    Ok(CountResult {
        value: CountValue::Integer(BigInt::from(count)),
        method: Method::Brute,
        terms: tuple_count,
    })
}

/// Closed formula, rounded to an exact integer (residual must stay below
/// 1e-6).
pub fn frobenius_count_formula(
    table: &CharacterTable,
    class: usize,
    genus: u32,
) -> Result<CountResult, CountError> {
    let group = table.group();
    let classes = group.classes();
    if class >= classes.count() {
        return Err(GroupError::ClassOutOfRange(class, classes.count()).into());
    }
    let mut sum = Complex64::new(0.0, 0.0);
    for (chi, &d) in table.characters().iter().zip(table.dimensions()) {
        let denom = (d as f64).powi(2 * genus as i32 - 1);
        sum += chi.class_values()[class] / denom;
    }
    let scale = (group.order() as f64).powi(2 * genus as i32 - 1) * classes.size(class) as f64;
    let value = sum * scale;
    let rounded = value.re.round();
    if (value.re - rounded).abs() > super::INTEGRALITY_TOL
        || value.im.abs() > super::INTEGRALITY_TOL
        || rounded < 0.0
    {
        return Err(CountError::NonIntegerResult(format!(
            "{}+{}i",
            value.re, value.im
        )));
    }
    Ok(CountResult {
        value: CountValue::Integer(BigInt::from(rounded as i64)),
        method: Method::Closed,
        terms: table.dimensions().len() as u64,
    })
}
