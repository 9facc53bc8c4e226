# database/db_manager.py
from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker

from config import DATABASE_URI
from database.models import Base, ClassPolynomialRecord, PartitionValueRecord


class DatabaseManager:
    """Audit cache for certified class polynomials and expensive partition residues."""

    def __init__(self, db_url=DATABASE_URI):
        self.engine = create_engine(db_url, echo=False)
        self.Session = sessionmaker(bind=self.engine)
        self.session = self.Session()

    def create_all(self):
        Base.metadata.create_all(self.engine)

    def close(self):
        self.session.close()
        self.engine.dispose()

    # ----- class polynomials -----

    def get_class_polynomial(self, D):
        record = self.session.query(ClassPolynomialRecord).filter_by(discriminant=D).first()
        if record is None:
            return None
        return record.coefficient_list()

    def add_class_polynomial(self, D, coeffs, digits=None):
        record = self.session.query(ClassPolynomialRecord).filter_by(discriminant=D).first()
        text = ','.join(str(int(c)) for c in coeffs)
        if record is None:
            record = ClassPolynomialRecord(discriminant=D, degree=len(coeffs) - 1, coefficients=text, digits=digits)
            self.session.add(record)
        else:
            record.coefficients = text
            record.degree = len(coeffs) - 1
            record.digits = digits
        self.session.commit()
        return record

    # ----- partition residues -----

    def get_partition_residue(self, n):
        record = self.session.query(PartitionValueRecord).filter_by(n=str(n)).first()
        return None if record is None else record.residue

    def get_partition_residues(self, ns):
        keys = [str(n) for n in ns]
        found = {}
        # SQLite caps bound parameters per statement.
        for start in range(0, len(keys), 500):
            chunk = keys[start:start + 500]
            for record in self.session.query(PartitionValueRecord).filter(PartitionValueRecord.n.in_(chunk)):
                found[int(record.n)] = record.residue
        return found

    def add_partition_residue(self, n, residue, source):
        if self.get_partition_residue(n) is not None:
            return
        self.session.add(PartitionValueRecord(n=str(n), residue=int(residue) % 4, source=source))
        self.session.commit()

    def add_partition_residues(self, items, source):
        existing = self.get_partition_residues([n for n, _ in items])
        for n, residue in items:
            if n not in existing:
                self.session.add(PartitionValueRecord(n=str(n), residue=int(residue) % 4, source=source))
        self.session.commit()

    def count_partition_residues(self):
        return self.session.query(PartitionValueRecord).count()
