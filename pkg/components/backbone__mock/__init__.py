from components.backbone__mock.backbone import MOCK_VOCAB_SIZE, MockBackbone

__all__ = ["MOCK_VOCAB_SIZE", "MockBackbone"]
