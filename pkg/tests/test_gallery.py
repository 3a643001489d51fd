from hopfpi import gallery


def test_committed_fixtures_match_builder():
    built = gallery.build()
    assert sorted(built) == gallery.names()
    for name, body in built.items():
        assert gallery.text(name) == body, name


def test_write_is_deterministic(tmp_path):
    written = gallery.write(tmp_path)
    assert written == gallery.names()
    assert all((tmp_path / n).read_text() == gallery.text(n) for n in written)
