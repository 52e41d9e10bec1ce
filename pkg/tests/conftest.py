from pathlib import Path

import pytest
from hypothesis import settings

from sumaudit import Sample

settings.register_profile("suite", deadline=None)
settings.load_profile("suite")

DATA_DIR = Path(__file__).parent / "data"


def make_sample(sample_id, reference, summary, **extra):
    return Sample(id=sample_id, reference=reference, summary=summary, extra=extra)


def ten_sample_corpus():
    """Hand-built fixture hitting every audit bucket exactly once.

    Expected verdicts (defaults 50/20/1.25): s1 valid, s2 minlen_summary,
    s3 minlen_ref, s4 identity, s5 min_cr (CR = 11/10), s6
    fully_extractive, s7 dup_exact (copy of s1), s8 dup_reference (s1's
    reference), s9 dup_summary (s1's summary), s10 valid.
    """
    r1 = (
        "Die Regierung stellte am Montag in Berlin ein neues Programm "
        "zur Förderung des Radverkehrs vor und nannte erste Details."
    )
    s1 = "Ein neues Programm fördert den Radverkehr deutlich."
    t4 = "Der Stadtrat beschloss die Sanierung der alten Brücke im Westen der Stadt."
    ref6 = (
        "Der Zoo öffnet wieder täglich seine Tore für alle Besucher "
        "und bietet neue Führungen an."
    )
    return [
        make_sample("s1", r1, s1),
        make_sample(
            "s2",
            "Der Gemeinderat diskutierte über die Zukunft des alten "
            "Hallenbads und vertagte die Entscheidung.",
            "\t \n",
        ),
        make_sample(
            "s3",
            "Kurzer Text ohne Inhalt.",
            "Eine ausreichend lange Zusammenfassung steht hier.",
        ),
        make_sample("s4", t4, t4),
        make_sample(
            "s5",
            "Elf Wörter stehen in diesem Satz über die neue Messe Berlin",
            "Zehn andere Wörter beschreiben diesen Satz über jene große Messe",
        ),
        make_sample("s6", ref6, "täglich seine Tore für alle Besucher"),
        make_sample("s7", r1, s1),
        make_sample(
            "s8",
            r1,
            "Minister kündigt umfangreiche Investitionen in neue Fahrradwege an.",
        ),
        make_sample(
            "s9",
            "Die Universität eröffnete gestern ein modernes Labor für "
            "angewandte Chemie und lud viele Gäste ein.",
            s1,
        ),
        make_sample(
            "s10",
            "Forschende der Hochschule präsentierten eine Studie zur "
            "Luftqualität in deutschen Innenstädten mit klaren Ergebnissen.",
            "Eine Studie bewertet die Luftqualität in Innenstädten.",
        ),
    ]


EXPECTED_TEN_VERDICTS = {
    "s1": "valid",
    "s2": "minlen_summary",
    "s3": "minlen_ref",
    "s4": "identity",
    "s5": "min_cr",
    "s6": "fully_extractive",
    "s7": "dup_exact",
    "s8": "dup_reference",
    "s9": "dup_summary",
    "s10": "valid",
}


@pytest.fixture
def ten_samples():
    return ten_sample_corpus()


@pytest.fixture
def data_dir():
    return DATA_DIR
