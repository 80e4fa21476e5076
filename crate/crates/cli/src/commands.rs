//! The `convert` and `check` workflows on serialized structures.

use hdgroups::cat1::cat1_report;
use hdgroups::cat2::commutation_report;
use hdgroups::xsq::{cat2_of_crossed_square, crossed_square_of_cat2, is_crossed_square};
use hdgroups::Report;

use crate::format::{
    cat2_document, read_cat1_parts, read_cat2, read_cat2_parts, read_xsq, read_xsq_candidate, xsq_document, Document,
    FormatError,
};

/// `cat2` documents become `xsq` documents and vice versa.
pub fn convert(text: &str) -> Result<String, FormatError> {
    let doc = Document::parse(text)?;
    match doc.kind.as_str() {
        "cat2" => Ok(xsq_document(&crossed_square_of_cat2(&read_cat2(&doc)?)?).emit()),
        "xsq" => Ok(cat2_document(&cat2_of_crossed_square(&read_xsq(&doc)?)?).emit()),
        other => Err(FormatError::Kind { expected: "cat2 or xsq".into(), found: other.into() }),
    }
}

/// Axiom report for a `cat1`, `cat2` or `xsq` document, one line per
/// check, and whether every check passed.
pub fn check(text: &str) -> Result<(String, bool), FormatError> {
    let doc = Document::parse(text)?;
    let mut out = String::new();
    let mut valid = true;
    let mut section = |title: &str, report: Report| {
        out.push_str(&format!("{title}\n{report}"));
        valid &= report.is_valid();
    };
    match doc.kind.as_str() {
        "cat1" => {
            let (_, t, h) = read_cat1_parts(&doc)?;
            section("cat1", cat1_report(&t, &h));
        }
        "cat2" => {
            let (_, [t1, h1, t2, h2]) = read_cat2_parts(&doc)?;
            section("first", cat1_report(&t1, &h1));
            section("second", cat1_report(&t2, &h2));
            section("commutation", commutation_report((&t1, &h1), (&t2, &h2)));
        }
        "xsq" => section("xsq", is_crossed_square(&read_xsq_candidate(&doc)?)),
        other => return Err(FormatError::Kind { expected: "cat1, cat2 or xsq".into(), found: other.into() }),
    }
    Ok((out, valid))
}
