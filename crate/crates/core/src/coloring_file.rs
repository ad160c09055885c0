//! Reading colorings from text.
//!
//! Two formats are accepted. JSON is an array of arrays of labels,
//! `[[1,3],[2,4]]`. Plain text has one class per line with labels
//! separated by whitespace or commas; blank lines and `#` comments are
//! skipped.

use crate::coloring::Coloring;
use crate::error::{Error, Result};

/// Parses raw classes without checking them against any `n`.
pub fn parse_classes(text: &str) -> Result<Vec<Vec<i64>>> {
    if text.trim_start().starts_with('[') {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    } else {
        parse_lines(text)
    }
}

/// Parses and validates a coloring of `1..=n`.
pub fn parse_coloring(n: u32, text: &str) -> Result<Coloring> {
    Coloring::new(n, parse_classes(text)?)
}

fn parse_lines(text: &str) -> Result<Vec<Vec<i64>>> {
    let mut classes = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut class = Vec::new();
        let mut start = None;
        // A trailing separator flushes the last token.
        for (col, ch) in line
            .char_indices()
            .chain(std::iter::once((line.len(), ' ')))
        {
            let sep = ch.is_whitespace() || ch == ',';
            match (sep, start) {
                (false, None) => start = Some(col),
                (true, Some(s)) => {
                    let token = &line[s..col];
                    let v = token.parse::<i64>().map_err(|_| Error::Parse {
                        line: i + 1,
                        column: s + 1,
                        message: format!("expected an integer vertex label, found {token:?}"),
                    })?;
                    class.push(v);
                    start = None;
                }
                _ => {}
            }
        }
        if !class.is_empty() {
            classes.push(class);
        }
    }
    if classes.is_empty() {
        return Err(Error::Parse {
            line: 1,
            column: 1,
            message: "no classes found".into(),
        });
    }
    Ok(classes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::PartitionError;

    #[test]
    fn json_and_text_agree() {
        let a = parse_coloring(5, "[[1],[2,3,4],[5]]").unwrap();
        let b = parse_coloring(5, "# three classes\n1\n2 3, 4\n\n5\n").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.len(), 3);
    }

    #[test]
    fn bad_token_position() {
        match parse_classes("1 2\n3 x4 5\n") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 3)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_classes("[[1,2],"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_classes("\n# nothing\n"),
            Err(Error::Parse { .. })
        ));
    }

    #[test]
    fn partition_errors_name_vertex() {
        let err = parse_coloring(4, "1 2\n2 3 4").unwrap_err();
        assert!(matches!(
            err,
            Error::NotPartition {
                source: PartitionError::Repeated(2),
                ..
            }
        ));
        let err = parse_coloring(4, "1 2\n3").unwrap_err();
        assert!(matches!(
            err,
            Error::NotPartition {
                source: PartitionError::Missing(4),
                ..
            }
        ));
        let err = parse_coloring(4, "[[1,2],[3,4,9]]").unwrap_err();
        assert!(matches!(
            err,
            Error::NotPartition {
                source: PartitionError::OutOfRange { vertex: 9, .. },
                ..
            }
        ));
    }
}
