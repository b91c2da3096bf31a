import altknot


def test_charpoly_of_members():
    assert altknot.charpoly(altknot.generate("cyclic:V=3")) == [-2, -3, 0, 1]
    assert altknot.poly_to_string(altknot.closed_form("twistknot:V=4")) == "x^4 - 2*x^2 - 4*x"
    match, generated, formula = altknot.verify_member("g:k=3,l=3,m=2")
    assert match and generated == formula


def test_diagram_round_trip():
    d = altknot.generate("p:k=3,l=2,m=2")
    back = altknot.Diagram.from_json(d.to_json())
    assert back == d
    assert back.vertex_count == 7
    assert back.is_valid()
    assert sum(sum(row) for row in back.adjacency()) == 14


def test_surgery():
    t = altknot.generate("cyclic:V=3")
    e = altknot.expand_vertex(t, 0, altknot.Lane.IN)
    assert altknot.charpoly(e) == altknot.closed_form("cyclic:V=4")
    rest, circles = altknot.eliminate_crossing(altknot.generate("twistchain:V=1"), 0, altknot.Lane.OUT)
    assert rest is None
    c = altknot.compose_twist(t, t.edges()[0], t, t.edges()[0], 0)
    assert altknot.charpoly(c) == altknot.closed_form("g:k=3,l=3,m=0")


def test_big_coefficients_are_python_ints():
    coeffs = altknot.jpoly(200)
    assert coeffs[200] == 1
    assert max(abs(c) for c in coeffs) > 2**64


def test_spectra_and_catalog():
    assert altknot.components([[0, 2], [2, 0]]) == 2
    assert len(altknot.decompositions([[0, 1, 1], [1, 0, 1], [1, 1, 0]])) == 1
    assert altknot.lookup("9_4")[0][0] == "f:j=5,k=4"
    homogeneous, source = altknot.check_family_recurrence(
        altknot.closed_form("cyclic:V=3"), altknot.closed_form("cyclic:V=4"), altknot.closed_form("cyclic:V=5"))
    assert not homogeneous and source == [2]
    assert all(ok for _, _, ok in altknot.check_identities(4))


def test_cli_entry():
    code, out, err = altknot.run_cli(["charpoly", "cyclic:V=3"])
    assert code == 0 and out == "x^3 - 3*x - 2\n"
    code, out, err = altknot.run_cli(["gen", "cyclic:V=0"])
    assert code == 2 and "V out of range" in err
