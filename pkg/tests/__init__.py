from tests.faker import faker
