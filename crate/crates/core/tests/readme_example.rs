use ratclass::shell::parse_expression;
use ratclass::{canonical_rep, classify, Field};

#[test]
fn library_example() -> ratclass::Result<()> {
    let f = Field::new(7, 1)?;
    let r = parse_expression("(x^3 - 3x + 1)/(x^2 - x)", &f)?;
    let c = classify(&f, &r)?;
    let w = c.witness.unwrap();
    assert_eq!(w.act(&f, &r)?, canonical_rep(&f, &c.label)?);
    Ok(())
}
