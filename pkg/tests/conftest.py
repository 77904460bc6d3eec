import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from refh.corpus import Corpus, DisciplineMap, PublicationRecord, QualityProfile


def write_files(tmp_path, publications="", citations="", profiles="", dmap=""):
    """Write the four corpus CSVs (header always included) and return paths."""
    paths = {}
    headers = {
        "publications": "pub_id,pub_year,country,affiliations,categories",
        "citations": "pub_id,citing_year,count",
        "profiles": (
            "institution,discipline,p4,p3,p2,p1,pu,"
            "p4_out,p3_out,p2_out,p1_out,pu_out,staff_fte,nci"
        ),
        "discipline_map": "discipline,category",
    }
    bodies = {
        "publications": publications,
        "citations": citations,
        "profiles": profiles,
        "discipline_map": dmap,
    }
    for name, body in bodies.items():
        text = headers[name] + "\n" + (body.strip() + "\n" if body.strip() else "")
        path = tmp_path / f"{name}.csv"
        path.write_text(text, encoding="utf-8")
        paths[name] = path
    return paths


def record(pub_id, pub_year=2003, country="GB", affiliations=("Alpha",),
           categories=("Chemistry",), citations=None):
    return PublicationRecord(
        pub_id=pub_id,
        pub_year=pub_year,
        country=country,
        affiliations=frozenset(affiliations),
        categories=frozenset(categories),
        citations_by_year=citations or {},
    )


def profile(institution="Alpha", discipline="chemistry",
            bands=(25.0, 25.0, 25.0, 25.0, 0.0), staff_fte=10.0,
            out_bands=None, nci=None):
    outs = out_bands if out_bands is not None else (None,) * 5
    return QualityProfile(
        institution=institution,
        discipline=discipline,
        p4=bands[0], p3=bands[1], p2=bands[2], p1=bands[3], pu=bands[4],
        staff_fte=staff_fte,
        p4_out=outs[0], p3_out=outs[1], p2_out=outs[2], p1_out=outs[3], pu_out=outs[4],
        nci=nci,
    )


@pytest.fixture
def chem_map():
    return DisciplineMap(
        discipline="chemistry",
        categories=frozenset({"Chemistry", "Chemical Engineering"}),
    )


@pytest.fixture
def small_corpus(chem_map):
    """Five records, two of which match (GB, 2001-2007 window, chemistry, Alpha)."""
    records = (
        record("P1", 2003, "GB", ("Alpha",), ("Chemistry",), {2004: 3, 2008: 2}),
        record("P2", 2005, "GB", ("Alpha", "Beta"), ("Chemical Engineering",), {2006: 1}),
        record("P3", 2000, "GB", ("Alpha",), ("Chemistry",), {2001: 9}),      # out of window
        record("P4", 2004, "US", ("Alpha",), ("Chemistry",), {2005: 4}),      # wrong country
        record("P5", 2004, "GB", ("Alpha",), ("History",), {2005: 4}),        # unmapped category
    )
    return Corpus(
        publications=records,
        profiles=(profile(),),
        discipline_maps=(chem_map,),
    )
