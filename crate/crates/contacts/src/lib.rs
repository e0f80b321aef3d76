//! A contact book stored as a tree of entries and manipulated entirely
//! through composed optics: a prism onto the phone number inside a contact,
//! a lens onto the contact inside an entry, and the in-order traversal of
//! the tree, glued together by plain optic composition.

use serde::{Deserialize, Serialize};

use optics_core::applicative::{Applicative, ConstF, Functor, StateF};
use optics_core::concrete::{inorder_traversal, Lens, Prism, Tree};
use optics_core::laws::sample::{Gen, SampleRng};
use optics_core::optic::{
    compose, lens_c2p, modify, prism_c2p, traversal_c2p, traverse_of, Composed, LensOptic,
    PrismOptic, TraversalOptic,
};
use optics_core::prelude::{hom, Hom, Sum, Value};

/// One way of reaching a person.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Contact {
    Phone(String),
    Skype(String),
}

/// A named contact-book entry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Entry {
    pub name: String,
    pub contact: Contact,
}

pub type Book = Tree<Entry>;

#[derive(Debug, thiserror::Error)]
pub enum BookError {
    #[error("cannot read {path}: {source}")]
    Unreadable {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed book document: {0}")]
    Malformed(String),
}

impl BookError {
    /// Process exit status for this error: 1 unreadable, 2 malformed.
    pub fn exit_code(&self) -> u8 {
        match self {
            BookError::Unreadable { .. } => 1,
            BookError::Malformed(_) => 2,
        }
    }
}

// The on-disk form mirrors the tree: null for an empty tree, otherwise an
// object with keys left, entry, right in that order.
#[derive(Serialize, Deserialize)]
struct NodeRepr {
    left: BookRepr,
    entry: Entry,
    right: BookRepr,
}

type BookRepr = Option<Box<NodeRepr>>;

fn to_repr(book: &Book) -> BookRepr {
    match book {
        Tree::Empty => None,
        Tree::Node(l, e, r) => Some(Box::new(NodeRepr {
            left: to_repr(l),
            entry: e.clone(),
            right: to_repr(r),
        })),
    }
}

fn from_repr(repr: BookRepr) -> Result<Book, BookError> {
    match repr {
        None => Ok(Tree::Empty),
        Some(node) => {
            if node.entry.name.is_empty() {
                return Err(BookError::Malformed(
                    "entry with empty name".to_string(),
                ));
            }
            Ok(Tree::node(
                from_repr(node.left)?,
                node.entry,
                from_repr(node.right)?,
            ))
        }
    }
}

pub fn parse_book(text: &str) -> Result<Book, BookError> {
    let repr: BookRepr = serde_json::from_str(text).map_err(|e| {
        BookError::Malformed(format!(
            "{} at line {} column {}",
            e,
            e.line(),
            e.column()
        ))
    })?;
    from_repr(repr)
}

pub fn read_book(path: &str) -> Result<Book, BookError> {
    let text = std::fs::read_to_string(path).map_err(|source| BookError::Unreadable {
        path: path.to_string(),
        source,
    })?;
    parse_book(&text)
}

/// Canonical serialization: two-space indentation, keys in declaration
/// order, trailing newline.
pub fn serialize_book(book: &Book) -> String {
    let mut out = serde_json::to_string_pretty(&to_repr(book)).expect("books always serialize");
    out.push('\n');
    out
}

// ---------------------------------------------------------------------------
// The optics.

/// Prism onto the number inside a phone contact; skype contacts pass
/// through untouched.
pub fn phone_optic() -> PrismOptic<String, String, Contact, Contact> {
    prism_c2p(Prism::new(
        hom(|c: Contact| match c {
            Contact::Phone(n) => Sum::Right(n),
            skype => Sum::Left(skype),
        }),
        hom(Contact::Phone),
    ))
}

/// Lens onto the contact field of an entry, preserving the name.
pub fn contact_optic() -> LensOptic<Contact, Contact, Entry, Entry> {
    lens_c2p(Lens::new(
        hom(|e: Entry| e.contact),
        hom(|(c, e): (Contact, Entry)| Entry {
            name: e.name,
            contact: c,
        }),
    ))
}

/// Traversal of the entries of a book in in-order position.
pub fn entries_optic() -> TraversalOptic<Entry, Entry, Book, Book> {
    traversal_c2p(inorder_traversal::<Entry, Entry>())
}

type ContactPhone =
    Composed<PrismOptic<String, String, Contact, Contact>, LensOptic<Contact, Contact, Entry, Entry>>;

/// The composite optic onto every phone number in a book, in entry order.
pub type BookPhones = Composed<ContactPhone, TraversalOptic<Entry, Entry, Book, Book>>;

pub fn book_phones() -> BookPhones {
    compose(compose(phone_optic(), contact_optic()), entries_optic())
}

// ---------------------------------------------------------------------------
// Operations over the composite optic.

/// Normalizes a phone number: strip everything but digits and a leading
/// `+`; exactly ten digits without `+` become `(AAA) BBB-CCCC`; anything
/// else is the bare digits (keeping a leading `+`). Idempotent.
pub fn tidy_number(number: &str) -> String {
    let has_plus = number.trim_start().starts_with('+');
    let digits: String = number.chars().filter(|c| c.is_ascii_digit()).collect();
    if !has_plus && digits.len() == 10 {
        format!("({}) {}-{}", &digits[0..3], &digits[3..6], &digits[6..10])
    } else if has_plus {
        format!("+{digits}")
    } else {
        digits
    }
}

/// Tidies every phone number by applying the composite optic at the
/// function arrow.
pub fn tidy_book(book: Book) -> Book {
    modify(&book_phones(), hom(|n: String| tidy_number(&n)))(book)
}

/// Collects the phone numbers in order via the constant-list applicative.
pub fn list_book_phones(book: Book) -> Vec<String> {
    let run = traverse_of::<ConstF<Vec<String>>, _>(
        &book_phones(),
        hom(|n: String| optics_core::applicative::Const::new(vec![n])),
    )
    .expect("book-phones is applicable at effectful functions");
    run(book).value
}

/// An output sink: a value together with the lines emitted while producing
/// it. Stands in for real terminal output so the print operation is
/// testable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sink<A> {
    pub value: A,
    pub lines: Vec<String>,
}

pub struct SinkF;

impl Functor for SinkF {
    type F<A: Value> = Sink<A>;

    fn fmap<A: Value, B: Value>(f: Hom<A, B>, fa: Sink<A>) -> Sink<B> {
        Sink {
            value: f(fa.value),
            lines: fa.lines,
        }
    }
}

impl Applicative for SinkF {
    fn pure<A: Value>(a: A) -> Sink<A> {
        Sink {
            value: a,
            lines: Vec::new(),
        }
    }

    fn ap<A: Value, B: Value>(ff: Sink<Hom<A, B>>, fa: Sink<A>) -> Sink<B> {
        let mut lines = ff.lines;
        lines.extend(fa.lines);
        Sink {
            value: (ff.value)(fa.value),
            lines,
        }
    }
}

/// Emits each phone number as a line and returns the (unchanged) book.
pub fn print_book(book: Book) -> (Vec<String>, Book) {
    let run = traverse_of::<SinkF, _>(
        &book_phones(),
        hom(|n: String| Sink {
            value: n.clone(),
            lines: vec![n],
        }),
    )
    .expect("book-phones is applicable at effectful functions");
    let sink = run(book);
    (sink.lines, sink.value)
}

fn digit_sum(n: &str) -> u32 {
    n.chars().filter_map(|c| c.to_digit(10)).sum()
}

/// Counts phone numbers with an odd digit sum by threading a counter
/// through the traversal.
pub fn count_odd_digit_sums(book: Book) -> i64 {
    let run = traverse_of::<StateF<i64>, _>(
        &book_phones(),
        hom(|n: String| {
            optics_core::applicative::State::new(move |count: i64| {
                let bump = if digit_sum(&n) % 2 == 1 { 1 } else { 0 };
                (n.clone(), count + bump)
            })
        }),
    )
    .expect("book-phones is applicable at effectful functions");
    run(book).run(0).1
}

// ---------------------------------------------------------------------------
// Samplers, so property tests can draw random books.

impl Gen for Contact {
    fn generate(rng: &mut SampleRng) -> Self {
        if bool::generate(rng) {
            let len = if bool::generate(rng) { 10 } else { 6 };
            let digits: String = (0..len)
                .map(|_| char::from(b'0' + (i64::generate(rng).rem_euclid(10)) as u8))
                .collect();
            Contact::Phone(digits)
        } else {
            Contact::Skype(String::generate(rng))
        }
    }
}

impl Gen for Entry {
    fn generate(rng: &mut SampleRng) -> Self {
        let mut name = String::generate(rng);
        if name.is_empty() {
            name.push('x');
        }
        Entry {
            name,
            contact: Contact::generate(rng),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use optics_core::laws::sample::rng_from;

    fn sample_book() -> Book {
        Tree::node(
            Tree::leaf(Entry {
                name: "Julie".to_string(),
                contact: Contact::Phone("555 123 4567".to_string()),
            }),
            Entry {
                name: "Ann".to_string(),
                contact: Contact::Skype("ann.s".to_string()),
            },
            Tree::leaf(Entry {
                name: "Bob".to_string(),
                contact: Contact::Phone("5551112222".to_string()),
            }),
        )
    }

    #[test]
    fn phone_prism_focuses_numbers() {
        let append = modify(&phone_optic(), hom(|n: String| format!("{n}0")));
        assert_eq!(
            append(Contact::Phone("123".to_string())),
            Contact::Phone("1230".to_string())
        );
        assert_eq!(
            append(Contact::Skype("al".to_string())),
            Contact::Skype("al".to_string())
        );
    }

    #[test]
    fn contact_lens_preserves_name() {
        let entry = Entry {
            name: "Ann".to_string(),
            contact: Contact::Skype("a".to_string()),
        };
        let viewed = optics_core::optic::lens_p2c(&contact_optic()).unwrap();
        assert_eq!((viewed.view)(entry.clone()), Contact::Skype("a".to_string()));
        let set = modify(&contact_optic(), hom(|_| Contact::Phone("1".to_string())));
        let updated = set(entry);
        assert_eq!(updated.name, "Ann");
        assert_eq!(updated.contact, Contact::Phone("1".to_string()));
    }

    #[test]
    fn book_phones_touches_only_phones() {
        let bang = modify(&book_phones(), hom(|n: String| format!("{n}!")));
        let out = bang(sample_book());
        assert_eq!(
            list_book_phones(out.clone()),
            vec!["555 123 4567!".to_string(), "5551112222!".to_string()]
        );
        // Skype entry untouched, names untouched.
        let labels = out.in_order_labels();
        assert_eq!(labels[1].contact, Contact::Skype("ann.s".to_string()));
        assert_eq!(
            labels.iter().map(|e| e.name.clone()).collect::<Vec<_>>(),
            vec!["Julie", "Ann", "Bob"]
        );
    }

    #[test]
    fn two_phone_mini_book_lists_in_order() {
        let book = Tree::node(
            Tree::leaf(Entry {
                name: "a".to_string(),
                contact: Contact::Phone("1".to_string()),
            }),
            Entry {
                name: "b".to_string(),
                contact: Contact::Skype("x".to_string()),
            },
            Tree::leaf(Entry {
                name: "c".to_string(),
                contact: Contact::Phone("2".to_string()),
            }),
        );
        assert_eq!(
            list_book_phones(book),
            vec!["1".to_string(), "2".to_string()]
        );
    }

    #[test]
    fn all_skype_book_is_fixed_by_modification() {
        let book = Tree::leaf(Entry {
            name: "Ann".to_string(),
            contact: Contact::Skype("ann.s".to_string()),
        });
        let bang = modify(&book_phones(), hom(|n: String| format!("{n}!")));
        assert_eq!(bang(book.clone()), book);
        assert!(list_book_phones(book).is_empty());
    }

    #[test]
    fn list_matches_fold_oracle_on_random_books() {
        let mut rng = rng_from(11);
        for _ in 0..200 {
            let book = Book::generate(&mut rng);
            let oracle: Vec<String> = book
                .in_order_labels()
                .into_iter()
                .filter_map(|e| match e.contact {
                    Contact::Phone(n) => Some(n),
                    Contact::Skype(_) => None,
                })
                .collect();
            assert_eq!(list_book_phones(book), oracle);
        }
    }

    #[test]
    fn print_lines_match_list_and_echo_book() {
        let mut rng = rng_from(12);
        for _ in 0..100 {
            let book = Book::generate(&mut rng);
            let (lines, echoed) = print_book(book.clone());
            assert_eq!(lines, list_book_phones(book.clone()));
            assert_eq!(echoed, book);
        }
    }

    #[test]
    fn tidy_number_rules() {
        assert_eq!(tidy_number("555 123 4567"), "(555) 123-4567");
        assert_eq!(tidy_number("(555) 123-4567"), "(555) 123-4567");
        assert_eq!(tidy_number("+44 20 1234"), "+44201234");
        assert_eq!(tidy_number("+44201234"), "+44201234");
        assert_eq!(tidy_number("12-34"), "1234");
    }

    #[test]
    fn tidy_is_idempotent_and_shape_preserving() {
        let mut rng = rng_from(13);
        for _ in 0..100 {
            let book = Book::generate(&mut rng);
            let once = tidy_book(book.clone());
            assert_eq!(tidy_book(once.clone()), once);
            // Shape, names, and skype contacts survive.
            let before = book.in_order_labels();
            let after = once.in_order_labels();
            assert_eq!(before.len(), after.len());
            assert_eq!(book.size(), once.size());
            for (b, a) in before.iter().zip(after.iter()) {
                assert_eq!(b.name, a.name);
                match (&b.contact, &a.contact) {
                    (Contact::Skype(x), Contact::Skype(y)) => assert_eq!(x, y),
                    (Contact::Phone(_), Contact::Phone(_)) => {}
                    _ => panic!("contact variant changed"),
                }
            }
        }
    }

    #[test]
    fn count_odd_digit_sums_matches_oracle() {
        let mut rng = rng_from(14);
        for _ in 0..100 {
            let book = Book::generate(&mut rng);
            let oracle = book
                .in_order_labels()
                .iter()
                .filter(|e| match &e.contact {
                    Contact::Phone(n) => digit_sum(n) % 2 == 1,
                    Contact::Skype(_) => false,
                })
                .count() as i64;
            assert_eq!(count_odd_digit_sums(book), oracle);
        }
    }

    #[test]
    fn serialization_round_trips() {
        let mut rng = rng_from(15);
        for _ in 0..100 {
            let book = Book::generate(&mut rng);
            let text = serialize_book(&book);
            let reparsed = parse_book(&text).unwrap();
            assert_eq!(reparsed, book);
            // Canonical on its own output.
            assert_eq!(serialize_book(&reparsed), text);
        }
    }

    #[test]
    fn malformed_documents_are_rejected() {
        assert!(matches!(parse_book("{"), Err(BookError::Malformed(_))));
        let empty_name =
            r#"{"left": null, "entry": {"name": "", "contact": {"phone": "1"}}, "right": null}"#;
        assert!(matches!(parse_book(empty_name), Err(BookError::Malformed(_))));
        let err = parse_book("{\n  \"left\": null,\n").unwrap_err();
        assert!(err.to_string().contains("line"));
    }
}
