//! Token scanner shared by the word and braid text syntaxes.
//!
//! A token is a symbol from a fixed alphabet, optionally followed by a caret
//! exponent (`a1^-3`, `D^2`). Tokens may be separated by whitespace. The
//! symbols `ε` and `1` stand for the identity.

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Token<'a> {
    pub symbol: &'a str,
    pub exponent: i64,
    /// 1-based character column of the symbol.
    pub column: usize,
}

/// Scans `text` into tokens drawn from `alphabet`.
pub(crate) fn scan<'a>(text: &'a str, alphabet: &[&'static str]) -> Result<Vec<Token<'a>>> {
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let (byte, c) = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let column = i + 1;
        let rest = &text[byte..];
        if rest.starts_with('ε') {
            i += 1;
            continue;
        }
        let symbol = alphabet
            .iter()
            .filter(|s| rest.starts_with(**s))
            .max_by_key(|s| s.len())
            .copied();
        let symbol = match symbol {
            Some(s) => s,
            None if c == '1' => {
                i += 1;
                continue;
            }
            None => {
                let bad: String = rest.chars().take_while(|c| !c.is_whitespace()).collect();
                return Err(Error::parse(
                    column,
                    format!(
                        "unexpected token '{bad}', expected one of {}",
                        alphabet.join(", ")
                    ),
                ));
            }
        };
        i += symbol.chars().count();
        let mut exponent = 1i64;
        if i < chars.len() && chars[i].1 == '^' {
            i += 1;
            let start = i;
            if i < chars.len() && (chars[i].1 == '-' || chars[i].1 == '+') {
                i += 1;
            }
            while i < chars.len() && chars[i].1.is_ascii_digit() {
                i += 1;
            }
            let lit: String = chars[start..i].iter().map(|(_, c)| *c).collect();
            exponent = lit.parse::<i64>().map_err(|_| {
                Error::parse(
                    start + 1,
                    format!("invalid exponent '{lit}' after '{symbol}^'"),
                )
            })?;
        }
        out.push(Token {
            symbol: &text[byte..byte + symbol.len()],
            exponent,
            column,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const AB: &[&str] = &["a1", "a2", "A1", "A2"];

    #[test]
    fn scans_exponents_and_columns() {
        let toks = scan("a1^-3  A2 a2^+2", AB).unwrap();
        let got: Vec<_> = toks
            .iter()
            .map(|t| (t.symbol, t.exponent, t.column))
            .collect();
        assert_eq!(got, vec![("a1", -3, 1), ("A2", 1, 8), ("a2", 2, 11)]);
    }

    #[test]
    fn identity_symbols_are_skipped() {
        assert!(scan("", AB).unwrap().is_empty());
        assert!(scan(" ε ", AB).unwrap().is_empty());
        assert!(scan("1", AB).unwrap().is_empty());
    }

    #[test]
    fn reports_column_of_bad_token() {
        match scan("a1 b3", AB) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 4),
            other => panic!("unexpected {other:?}"),
        }
        match scan("a1^x", AB) {
            Err(Error::Parse { column, .. }) => assert_eq!(column, 4),
            other => panic!("unexpected {other:?}"),
        }
    }
}
