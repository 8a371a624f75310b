// Compiles the guide's code blocks as doctests so the book and the API
// cannot drift apart. One module per chapter to locate failures.

#[doc = include_str!("../../../book/src/introduction.md")]
mod introduction {}
#[doc = include_str!("../../../book/src/cobweb.md")]
mod cobweb {}
#[doc = include_str!("../../../book/src/orderability.md")]
mod orderability {}
#[doc = include_str!("../../../book/src/realizers.md")]
mod realizers {}
#[doc = include_str!("../../../book/src/deciding.md")]
mod deciding {}
#[doc = include_str!("../../../book/src/oracle.md")]
mod oracle {}
#[doc = include_str!("../../../book/src/cli.md")]
mod cli {}
#[doc = include_str!("../../../README.md")]
mod readme {}
