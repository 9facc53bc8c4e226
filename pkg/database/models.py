# database/models.py

from sqlalchemy import Column, DateTime, Integer, String, Text, UniqueConstraint, func
from sqlalchemy.orm import declarative_base

Base = declarative_base()


class ClassPolynomialRecord(Base):
    __tablename__ = 'class_polynomials'
    id = Column(Integer, primary_key=True)
    discriminant = Column(Integer, unique=True, nullable=False)
    degree = Column(Integer, nullable=False)
    # Decimal integers separated by commas, leading coefficient first.
    coefficients = Column(Text, nullable=False)
    digits = Column(Integer)
    created = Column(DateTime(timezone=True), server_default=func.now())

    def coefficient_list(self):
        return [int(c) for c in self.coefficients.split(',')]


class PartitionValueRecord(Base):
    __tablename__ = 'partition_values'
    __table_args__ = (UniqueConstraint('n', name='uq_partition_n'),)
    id = Column(Integer, primary_key=True)
    # n can exceed 2**63 only far beyond any practical run; stored as text.
    n = Column(String, nullable=False)
    residue = Column(Integer, nullable=False)
    source = Column(String, nullable=False)
    created = Column(DateTime(timezone=True), server_default=func.now())
