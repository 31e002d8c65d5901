use coherence_core::{evaluate_all, make_density, parse_state};
use serde_json::{Map, Number, Value};

use crate::error::CliError;
use crate::format::round12;
use crate::selector::Selector;

/// Flat JSON object with every report field, from state-file text.
pub fn eval_json(text: &str, x: Selector, z: Selector) -> Result<String, CliError> {
    let file = parse_state::<f64>(text)?;
    let rho = make_density(file.matrix, file.dim_a, file.dim_b)?;
    let report = evaluate_all(&rho, &x.basis(rho.dim_a())?, &z.basis(rho.dim_a())?)?;

    let mut obj = Map::new();
    for (name, v) in report.fields() {
        let num = Number::from_f64(round12(v))
            .ok_or_else(|| CliError::Validation(format!("{name} is not finite ({v})")))?;
        obj.insert(name.to_owned(), Value::Number(num));
    }
    Ok(serde_json::to_string_pretty(&Value::Object(obj)).expect("JSON object serializes"))
}

pub fn cmd_eval(state: &str, x: Selector, z: Selector) -> Result<(), CliError> {
    let text = std::fs::read_to_string(state).map_err(|e| CliError::io(state, e))?;
    println!("{}", eval_json(&text, x, z)?);
    Ok(())
}
