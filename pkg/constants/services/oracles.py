ORACLE_AGREE = "agree"
ORACLE_DISAGREE = "disagree"
