import pytest

from primegb.powerprods import Ordering


@pytest.fixture
def corpus_fix_witness():
    """A corpus configuration whose output stops being a Gröbner basis when
    polynomials regenerated during basis maintenance skip pair updates.

    Found by sweeping the corpus with the hook disabled: example-1 under the
    prime-based order then emits 6 polynomials instead of the correct unit
    ideal {1}, and the s-polynomial check has witnesses.  Most of the corpus
    misbehaves the same way; this is simply the cheapest reproduction.
    """
    return "example-1", Ordering.PRIME_BASED
