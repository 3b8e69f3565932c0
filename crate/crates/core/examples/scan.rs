use dynnikov_core::*;
fn main() {
    for (a,b) in [(3i64, 7i64), (1, 20000), (-7, 13)] {
        let d = DynnikovCoord::new(a, b).unwrap();
        eprintln!("untwist"); let u = untwist(&d).unwrap();
        eprintln!("apply_word"); assert_eq!(apply_word(&u.word, &d), u.terminal);
        eprintln!("classify"); classify(&d).unwrap();
        eprintln!("len"); conjugation_length(&d).unwrap();
        eprintln!("reduced"); assert!(u.word.is_freely_reduced());
    }
    println!("done");
}
