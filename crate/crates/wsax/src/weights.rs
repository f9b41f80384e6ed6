//! Weight vector files: a bracketed list (`[0.69 0.256 ...]`) or one value
//! per line. Commas are accepted as separators.

use std::path::Path;

use wsax_core::WeightVector;

use crate::error::{Error, Result};
use crate::fsutil;

pub fn parse_weights(path: &Path) -> Result<WeightVector> {
    parse_weights_str(&fsutil::read_to_string(path)?)
}

pub fn parse_weights_str(text: &str) -> Result<WeightVector> {
    let body = text.trim();
    let body = body.strip_prefix('[').unwrap_or(body);
    let body = body.strip_suffix(']').unwrap_or(body);
    let values = body
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .enumerate()
        .map(|(index, token)| {
            token.parse::<f64>().map_err(|_| Error::WeightToken {
                index,
                token: token.to_string(),
            })
        })
        .collect::<Result<Vec<f64>>>()?;
    if values.is_empty() {
        return Err(Error::EmptyWeights);
    }
    Ok(WeightVector::new(values)?)
}

pub fn format_weights(w: &WeightVector) -> String {
    let body: Vec<String> = w.as_slice().iter().map(|v| format!("{v:?}")).collect();
    format!("[{}]\n", body.join(" "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn list_and_lines() {
        let w = parse_weights_str("[0.5 0.25, 1]").unwrap();
        assert_eq!(w.as_slice(), &[0.5, 0.25, 1.0]);
        let w = parse_weights_str("0.1\n0.2\n\n0.3\n").unwrap();
        assert_eq!(w.as_slice(), &[0.1, 0.2, 0.3]);
    }

    #[test]
    fn rejects_bad_weights() {
        assert!(matches!(
            parse_weights_str("[1.2]"),
            Err(Error::Core(wsax_core::Error::WeightOutOfRange {
                index: 0,
                ..
            }))
        ));
        assert!(matches!(
            parse_weights_str("[0.1 zero]"),
            Err(Error::WeightToken { index: 1, .. })
        ));
        assert!(matches!(parse_weights_str("[]"), Err(Error::EmptyWeights)));
        assert!(parse_weights_str("[-0.5]").is_err());
    }

    #[test]
    fn format_round_trips() {
        let w = WeightVector::new(vec![0.1, 1.0 / 3.0, 0.0, 1.0]).unwrap();
        assert_eq!(parse_weights_str(&format_weights(&w)).unwrap(), w);
    }
}
