mod common;

#[test]
fn worked_examples() {
    let mut bad = Vec::new();
    for c in common::cases() {
        if c.got != c.want {
            bad.push(format!("{}: got {}, want {}", c.name, c.got, c.want));
        }
    }
    assert!(bad.is_empty(), "{}", bad.join("\n"));
}
